#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracver {

// Uniform time mesh t_j = j h on [0, T].
struct Grid {
    double T = 1.0;
    int N = 1;
    double h = 1.0;

    Grid() = default;
    Grid(double T_, int N_); // validates T > 0, N >= 1
    double node(int j) const { return j * h; }
    double midpoint(int j) const { return (j + 0.5) * h; } // midpoint of cell j
    bool same_mesh(const Grid& other, double tol = 1e-12) const;
};

// How the stored value at t = 0 is to be read.
enum class OriginMark {
    Value,     // ordinary function value
    LimitZero, // stored 0 is the t -> 0+ limit
    Undefined, // the quantity is only defined for t > 0; stored 0 is a placeholder
};

// Values (and optionally derivative values) on a Grid.
struct SampledFunction {
    Grid grid;
    Eigen::VectorXd values;
    std::optional<Eigen::VectorXd> deriv_values;
    OriginMark origin = OriginMark::Value;

    SampledFunction() = default;
    SampledFunction(Grid g, Eigen::VectorXd v);
    SampledFunction(Grid g, Eigen::VectorXd v, Eigen::VectorXd dv);
    void validate() const;
    int size() const { return static_cast<int>(values.size()); }
};

// A power contribution c * t^e of a derivative near t = 0 (e > -1), kept
// separate so convolutions can integrate it in closed form.
struct PowerTerm {
    double coeff = 0.0;
    double expo = 0.0;
};

// Unified operator input: an analytic function (optionally with an analytic
// derivative and a list of leading power terms of that derivative), or a
// sample table.
struct FunctionInput {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::vector<PowerTerm> deriv_power_terms;
    std::optional<SampledFunction> samples;

    static FunctionInput analytic(std::function<double(double)> f);
    static FunctionInput analytic(std::function<double(double)> f,
                                  std::function<double(double)> df);
    static FunctionInput sampled(SampledFunction s);

    bool has_value_fn() const { return static_cast<bool>(value); }
    bool has_deriv_fn() const { return static_cast<bool>(deriv); }
    bool is_sampled() const { return samples.has_value(); }

    // Value at a node of `g`; uses the closure when present, else the table.
    double value_at_node(const Grid& g, int j) const;
};

// Named test functions used by the CLI and the verification registry.
// Known selectors: const, one, zero, linear, power:<gamma>, cos, sin, exp.
FunctionInput named_function(const std::string& name);

} // namespace fracver
