#include "fracver/grid.hpp"

#include "fracver/errors.hpp"
#include "fracver/specfun.hpp"

#include <cmath>
#include <string>

namespace fracver {

Grid::Grid(double T_, int N_) : T(T_), N(N_) {
    if (!(T > 0.0)) throw DomainError("Grid: horizon T must be > 0");
    if (N < 1) throw DomainError("Grid: N must be >= 1");
    h = T / N;
}

bool Grid::same_mesh(const Grid& other, double tol) const {
    return N == other.N && std::abs(T - other.T) <= tol * std::max(1.0, std::abs(T)) &&
           std::abs(h - other.h) <= tol * std::max(1.0, h);
}

SampledFunction::SampledFunction(Grid g, Eigen::VectorXd v)
    : grid(g), values(std::move(v)) {
    validate();
}

SampledFunction::SampledFunction(Grid g, Eigen::VectorXd v, Eigen::VectorXd dv)
    : grid(g), values(std::move(v)), deriv_values(std::move(dv)) {
    validate();
}

void SampledFunction::validate() const {
    if (values.size() != grid.N + 1)
        throw DomainError("SampledFunction: values length must be N+1");
    if (deriv_values && deriv_values->size() != grid.N + 1)
        throw DomainError("SampledFunction: deriv_values length must be N+1");
}

FunctionInput FunctionInput::analytic(std::function<double(double)> f) {
    FunctionInput in;
    in.value = std::move(f);
    return in;
}

FunctionInput FunctionInput::analytic(std::function<double(double)> f,
                                      std::function<double(double)> df) {
    FunctionInput in;
    in.value = std::move(f);
    in.deriv = std::move(df);
    return in;
}

FunctionInput FunctionInput::sampled(SampledFunction s) {
    s.validate();
    FunctionInput in;
    in.samples = std::move(s);
    return in;
}

double FunctionInput::value_at_node(const Grid& g, int j) const {
    if (has_value_fn()) return value(g.node(j));
    if (samples) {
        if (!samples->grid.same_mesh(g))
            throw DomainError("FunctionInput: sample grid does not match the target grid");
        return samples->values[j];
    }
    throw DomainError("FunctionInput: no value representation");
}

FunctionInput named_function(const std::string& name) {
    if (name == "const" || name == "one")
        return FunctionInput::analytic([](double) { return 1.0; }, [](double) { return 0.0; });
    if (name == "zero")
        return FunctionInput::analytic([](double) { return 0.0; }, [](double) { return 0.0; });
    if (name == "linear")
        return FunctionInput::analytic([](double t) { return t; }, [](double) { return 1.0; });
    if (name == "cos")
        return FunctionInput::analytic([](double t) { return std::cos(t); },
                                       [](double t) { return -std::sin(t); });
    if (name == "sin")
        return FunctionInput::analytic([](double t) { return std::sin(t); },
                                       [](double t) { return std::cos(t); });
    if (name == "exp")
        return FunctionInput::analytic([](double t) { return std::exp(t); },
                                       [](double t) { return std::exp(t); });
    if (name.rfind("power:", 0) == 0) {
        const double g = std::stod(name.substr(6));
        if (!(g > 0.0)) throw DomainError("named_function: power exponent must be > 0");
        FunctionInput in = FunctionInput::analytic(
            [g](double t) { return std::pow(t, g); },
            [g](double t) { return t > 0.0 ? g * std::pow(t, g - 1.0) : (g == 1.0 ? 1.0 : 0.0); });
        if (g < 2.0 && g != 1.0)
            in.deriv_power_terms.push_back({g, g - 1.0});
        return in;
    }
    throw DomainError("named_function: unknown selector '" + name + "'");
}

} // namespace fracver
