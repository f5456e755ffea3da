#pragma once

#include "fracver/convquad.hpp"

namespace fracver {

enum class OperatorKind {
    RlIntegral,
    RlDerivative,
    CaputoDerivative,
    CfDerivative,
    AbcDerivative,
    CfIntegral,
    AbIntegral,
    GenericDPhi,
    PrabhakarIntegral,
    PrabhakarDerivative,
};

// J^alpha f, alpha in (0, 1].
SampledFunction rl_integral(double alpha, const FunctionInput& f, const Grid& g);

// Caputo derivative of order alpha in (0, 1).
SampledFunction caputo_derivative(double alpha, const FunctionInput& f, const Grid& g);

// Riemann-Liouville derivative via D_RL f = D_C f + f(0) t^{-alpha}/Gamma(1-alpha).
SampledFunction rl_derivative(double alpha, const FunctionInput& f, const Grid& g);

SampledFunction cf_derivative(double alpha, const FunctionInput& f, const Grid& g,
                              double M = 1.0);
SampledFunction abc_derivative(double alpha, const FunctionInput& f, const Grid& g,
                               double B = 1.0);

// I_cf f = (1-alpha)/M f + alpha/M int_0^t f. Nodal derivatives are filled when
// f carries analytic value and derivative closures.
SampledFunction cf_integral(double alpha, const FunctionInput& f, const Grid& g,
                            double M = 1.0);

// I_ab f = (1-alpha)/B f + alpha/B J^alpha f.
SampledFunction ab_integral(double alpha, const FunctionInput& f, const Grid& g,
                            double B = 1.0);

// D_phi f = int_0^t k(t-tau) f'(tau) dtau for an arbitrary kernel.
SampledFunction generic_dphi(const KernelSpec& k, const FunctionInput& f, const Grid& g);

SampledFunction prabhakar_integral(double alpha, double beta, double gamma_p, double lambda,
                                   const FunctionInput& f, const Grid& g);

// Prabhakar derivative for beta in (0,1): kernel s^{-beta} E^{-gamma}_{alpha,1-beta}(lambda s^alpha).
SampledFunction prabhakar_derivative(double alpha, double beta, double gamma_p, double lambda,
                                     const FunctionInput& f, const Grid& g);

// Integration-by-parts forms; these sample only f, never f'.
SampledFunction cf_derivative_byparts(double alpha, const FunctionInput& f, const Grid& g,
                                      double M = 1.0);
SampledFunction abc_derivative_byparts(double alpha, const FunctionInput& f, const Grid& g,
                                       double B = 1.0);

// Composition inputs: operator outputs as analytic closures carrying exact
// derivative structure (leading power terms split off), so that a second
// operator can be applied without losing accuracy near t = 0.
FunctionInput rl_integral_input(double alpha, const FunctionInput& f, int subcells = 192);
FunctionInput cf_integral_input(double alpha, const FunctionInput& f, double M = 1.0,
                                int subcells = 192);
FunctionInput ab_integral_input(double alpha, const FunctionInput& f, double B = 1.0,
                                int subcells = 192);

} // namespace fracver
