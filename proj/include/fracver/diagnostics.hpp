#pragma once

#include "fracver/grid.hpp"
#include "fracver/kernel.hpp"

#include <vector>

namespace fracver {

enum class SonineClass { SoninePair, DefectiveAtZero };

// Per-gap values of int_s^t phi(t-tau) psi(tau-s) dtau; a Sonine pair keeps
// them at 1, a bounded kernel forces them to 0 as the gap closes.
struct SonineReport {
    std::vector<double> gaps;      // strictly decreasing toward 0
    std::vector<double> integrals; // one per gap
    SonineClass classification = SonineClass::DefectiveAtZero;
    double decay_exponent = 0.0;   // log-log slope over the smallest gaps
    double tolerance = 1e-6;
};

SonineReport sonine_check(const KernelSpec& phi, const KernelSpec& psi,
                          std::vector<double> gaps, int subcells = 1024,
                          double tolerance = 1e-6);

// Laplace-domain probe: phi_hat at the given abscissae and the induced
// psi_hat(s) = 1 / (s phi_hat(s)).
struct LaplaceProbe {
    std::vector<double> s_values;
    std::vector<double> phi_hat;
    std::vector<double> psi_hat;
};

// int_0^T e^{-st} k(t) dt (zero extension beyond T). Closed forms for CfExp
// and PowerLaw; graded quadrature otherwise.
double laplace_transform_numeric(const KernelSpec& k, double s, double T);

LaplaceProbe laplace_probe(const KernelSpec& k, std::vector<double> s_values, double T);

// s phi_hat(s) at a large abscissa, with T chosen so the truncation error of
// the zero extension is below 1e-8; for bounded kernels this approaches k(0).
double final_value_check(const KernelSpec& k, double s = 1e4);

// The split candidate inverse J~_psi u = u/phi(0) + scale * (kernel * u):
// closed form for CfExp and AbMl kernels.
struct JpsiStar {
    double inverse_phi0;  // 1/phi(0)
    double kernel_scale;  // factor multiplying the convolution
    KernelSpec psi_star;
};

JpsiStar construct_jpsi_star(const KernelSpec& k);

// Apply J~_psi to a function on a grid.
SampledFunction apply_jpsi_star(const JpsiStar& j, const FunctionInput& f, const Grid& g);

} // namespace fracver
