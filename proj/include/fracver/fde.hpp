#pragma once

#include "fracver/operators.hpp"

#include <optional>

namespace fracver {

// Initial-value problem D y = g(t, y), y(0) = y0, under the selected operator.
struct FdeProblem {
    OperatorKind kind = OperatorKind::CaputoDerivative;
    double alpha = 0.5;
    std::optional<KernelSpec> kernel; // required for GenericDPhi
    std::function<double(double, double)> g;
    std::function<double(double, double)> g_t; // optional partials
    std::function<double(double, double)> g_y;
    double y0 = 0.0;
    Grid grid;
    double M = 1.0; // CF normalization
    double B = 1.0; // ABC normalization

    void validate() const;
};

// Residual D y - g(t, y) together with the closed-form defect the pseudo-
// solution is expected to carry.
struct ResidualReport {
    SampledFunction residual;
    SampledFunction predicted_defect;
    double max_mismatch = 0.0; // over interior nodes
};

// Caputo solver: implicit product-rectangle stepping on y = y0 + J^alpha g(.,y)
// with per-step fixed-point iteration.
SampledFunction solve_caputo(const FdeProblem& p);

// Pseudo-solution y = y0 + I_cf g(.,y) (resp. I_ab); it solves the original
// equation only when g(0, y(0)) = 0. Node 0 holds the fixed point of the
// pseudo equation, which differs from y0 unless g(0, y(0)) = 0.
SampledFunction solve_pseudo(const FdeProblem& p);

ResidualReport residual_check(const FdeProblem& p, const SampledFunction& y);

// With g(0,y0) = 0, the CF problem is an implicit first-order ODE
//   y' (1 - (1-alpha)/M g_y) = (1-alpha)/M g_t + alpha/M g;
// solved by the classical 4-stage Runge-Kutta step.
SampledFunction reduce_cf_to_integer(const FdeProblem& p);

// With g(0,y0) = 0, the ABC problem is the Caputo problem
//   D_C^alpha [ y - (1-alpha)/B g(.,y) ] = alpha/B g(.,y);
// solved with the Caputo stepping machinery on the transformed state.
SampledFunction reduce_abc_to_caputo(const FdeProblem& p);

} // namespace fracver
