#pragma once

#include "fracver/grid.hpp"
#include "fracver/specfun.hpp"

#include <variant>

namespace fracver {

// k(s) = s^{mu-1} / Gamma(mu); weakly singular at 0 for mu < 1.
struct PowerLaw {
    double mu;
};

// k(s) = M/(1-alpha) exp(-W_alpha s), W_alpha = alpha/(1-alpha).
struct CfExp {
    double alpha;
    double M = 1.0;
};

// k(s) = B/(1-alpha) E_alpha(-W_alpha s^alpha).
struct AbMl {
    double alpha;
    double B = 1.0;
};

// k(s) = s^{beta-1} E^gamma_{alpha,beta}(lambda s^alpha).
struct PrabhakarKernel {
    double alpha;
    double beta;
    double gamma_p;
    double lambda;
};

// Piecewise-linear kernel given by samples on [0, T_k].
struct Tabulated {
    SampledFunction samples;
    Eigen::VectorXd cumulative; // exact integral of the interpolant at the nodes
};

using KernelSpec = std::variant<PowerLaw, CfExp, AbMl, PrabhakarKernel, Tabulated>;

KernelSpec make_power_law(double mu);
KernelSpec make_cf_exp(double alpha, double M = 1.0);
KernelSpec make_ab_ml(double alpha, double B = 1.0);
KernelSpec make_prabhakar_kernel(double alpha, double beta, double gamma_p, double lambda);
KernelSpec make_tabulated(SampledFunction samples);

double w_alpha(double alpha); // alpha / (1 - alpha)

// The alternative normalization 1 - alpha + alpha/Gamma(alpha).
double normalization_one_at_endpoints(double alpha);

// Pointwise kernel value; s = 0 is allowed only for bounded kernels.
double kernel_value(const KernelSpec& k, double s);

// F(s) = int_0^s k(r) dr, in closed form for the analytic kinds.
double kernel_antiderivative(const KernelSpec& k, double s);

// int_0^s r k(r) dr; available for the kinds with product-trapezoid support.
double kernel_first_moment(const KernelSpec& k, double s);
bool kernel_has_first_moment(const KernelSpec& k);

// int_0^t k(t - tau) tau^{nu-1} dtau in closed form (nu > 0).
double kernel_power_convolution(const KernelSpec& k, double nu, double t);

// True exactly for CfExp, AbMl, PowerLaw with mu >= 1, and Tabulated.
bool is_bounded(const KernelSpec& k);

double kernel_domain_end(const KernelSpec& k); // +inf except for Tabulated

} // namespace fracver
