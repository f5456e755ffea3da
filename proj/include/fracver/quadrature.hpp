#pragma once

#include <functional>

namespace fracver::quad {

// tanh-sinh quadrature on (a, b). Integrable endpoint singularities are fine.
// The integrand receives (x, dist_a, dist_b); evaluate through whichever
// distance is numerically stable near an endpoint.
double tanh_sinh(const std::function<double(double, double, double)>& f,
                 double a, double b, double rel_tol = 1e-12, int max_level = 10);

// Convenience overload for integrands that only need x.
double tanh_sinh(const std::function<double(double)>& f,
                 double a, double b, double rel_tol = 1e-12, int max_level = 10);

// Adaptive 15-point Gauss-Legendre with bisection, for smooth or peaked
// integrands on [a, b].
double adaptive_gauss(const std::function<double(double)>& f,
                      double a, double b, double tol = 1e-12, int max_depth = 28);

} // namespace fracver::quad
