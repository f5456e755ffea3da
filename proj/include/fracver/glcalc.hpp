#pragma once

#include "fracver/grid.hpp"

namespace fracver {

// Grunwald-Letnikov coefficients omega_j = (-1)^j binom(alpha, j), generated by
// the multiplicative recurrence omega_j = omega_{j-1} (1 - (alpha+1)/j).
struct GLWeights {
    double alpha = 0.5;
    Eigen::VectorXd omega; // omega_0 .. omega_N
};

// Left-history extension: zero history or subtraction of the degree-0 Taylor
// polynomial (f - f(0)).
enum class ExtensionKind { ZeroExtension, TaylorExtension };

GLWeights gl_coefficients(double alpha, int N);

// value at t_n = h^{-alpha} sum_{j=0..n} omega_j F(t_n - j h),
// F = f for ZeroExtension, F = f - f(0) for TaylorExtension.
SampledFunction gl_derivative(double alpha, const FunctionInput& f, const Grid& g,
                              ExtensionKind ext);

} // namespace fracver
