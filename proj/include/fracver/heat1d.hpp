#pragma once

#include "fracver/grid.hpp"
#include "fracver/kernel.hpp"

#include <functional>

namespace fracver {

// D_t u - u_xx = f on (0,1) x (0,T], Dirichlet data, uniform mesh in x.
struct HeatProblem {
    int x_nodes = 32; // interior points; dx = 1/(x_nodes+1)
    Grid time;
    KernelSpec kernel = PowerLaw{0.5}; // temporal kernel
    std::function<double(double)> v0;
    std::function<double(double, double)> forcing; // f(x, t)
    std::function<double(double)> g_left;
    std::function<double(double)> g_right;

    void validate() const;
    double dx() const { return 1.0 / (x_nodes + 1); }
    bool compatible_boundary() const; // v0 matches the boundary data at t = 0
};

struct HeatField {
    Grid time;
    int x_nodes = 0;
    Eigen::MatrixXd u;                    // (N+1) x (x_nodes+2), boundary columns included
    double initial_slice_residual = 0.0;  // max_x |Lap_h v0 + f(.,0)|
    Eigen::VectorXd per_level_residuals;  // max_x PDE residual per time level (n >= 1)
    bool unsatisfiable_annotation = false; // bounded kernel with incompatible data
};

// Caputo case (PowerLaw kernel with mu = 1-alpha): implicit product-rectangle
// stepping of u = v0 + J^alpha (Lap u + f). Bounded case (CfExp or AbMl):
// stepping of the pseudo-solution u = v0 + J~_psi (Lap u + f); level 0 then
// stores the pseudo value, which misses v0 exactly when the data are
// incompatible with the equation.
HeatField solve_heat(const HeatProblem& p);

// max over interior x of |Lap_h v0(x) + f(x, 0)|; what a bounded temporal
// kernel forces to vanish.
double initial_slice_residual(const HeatProblem& p);

} // namespace fracver
