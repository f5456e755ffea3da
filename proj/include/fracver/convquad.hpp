#pragma once

#include "fracver/grid.hpp"
#include "fracver/kernel.hpp"

#include <memory>

namespace fracver {

// Product-integration weights on a uniform grid. The kernel is integrated
// exactly over each cell, so the table is Toeplitz:
//   w[n][j] = cell(n - j),  cell(m) = F(m h) - F((m-1) h),  F(s) = int_0^s k.
struct ConvolutionWeights {
    Grid grid;
    Eigen::VectorXd cell;       // cell(m) stored at index m-1, m = 1..N
    Eigen::VectorXd anti;       // F(t_m), m = 0..N
    bool has_trapezoid = false;
    Eigen::VectorXd trap_left;  // per-lag weight of the left-node value
    Eigen::VectorXd trap_right; // per-lag weight of the right-node value

    double row_sum(int n) const { return anti[n]; } // = int_0^{t_n} k, exactly
};

// Cached per (kernel, grid); the returned table is immutable and safe to share
// across threads.
std::shared_ptr<const ConvolutionWeights> pi_rectangle_weights(const KernelSpec& k,
                                                               const Grid& g);

// int_0^{t_n} k(t_n - tau) f'(tau) dtau on every grid node. Analytic inputs are
// sampled at cell midpoints with any declared power terms of f' integrated in
// closed form; sampled inputs use nodal derivatives (product-trapezoid when
// requested and available) or per-cell differences.
SampledFunction convolve_derivative(const KernelSpec& k, const FunctionInput& f,
                                    const Grid& g, bool trapezoid = false);

// int_0^{t_n} k(t_n - tau) f(tau) dtau on every grid node.
SampledFunction convolve_value(const KernelSpec& k, const FunctionInput& f, const Grid& g);

// Second-order finite-difference derivative samples (central; one-sided at the
// ends). Requires N >= 2.
SampledFunction differentiate_samples(const SampledFunction& f);

// Pointwise int_0^tau k(tau - s) g(s) ds by product integration with `cells`
// uniform cells; used by composition closures.
double convolve_value_at(const KernelSpec& k, const std::function<double(double)>& g,
                         double tau, int cells = 128);

} // namespace fracver
