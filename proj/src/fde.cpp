#include "fracver/fde.hpp"

#include "fracver/errors.hpp"

#include <cmath>
#include <string>

namespace fracver {

namespace {

constexpr double kFixedPointTol = 1e-12;
constexpr int kFixedPointCap = 50;

[[noreturn]] void fixed_point_failure(int step, double gap) {
    throw ConvergenceError("fde: fixed point stalled at step " + std::to_string(step) +
                           " (iterate gap " + std::to_string(gap) + ")");
}

double zero_start_constraint(const FdeProblem& p) { return p.g(0.0, p.y0); }

void require_compatible_start(const FdeProblem& p, const char* who) {
    const double c = zero_start_constraint(p);
    if (std::abs(c) > 1e-12)
        throw DomainError(std::string(who) + ": requires g(0, y0) = 0, got " + std::to_string(c));
}

} // namespace

void FdeProblem::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("FdeProblem: alpha must lie in (0,1)");
    if (!g) throw DomainError("FdeProblem: missing right-hand side g");
    if (kind == OperatorKind::GenericDPhi && !kernel)
        throw DomainError("FdeProblem: GenericDPhi needs a kernel");
    if (kind != OperatorKind::CaputoDerivative && kind != OperatorKind::CfDerivative &&
        kind != OperatorKind::AbcDerivative && kind != OperatorKind::GenericDPhi)
        throw DomainError("FdeProblem: unsupported operator kind");
}

SampledFunction solve_caputo(const FdeProblem& p) {
    p.validate();
    if (p.kind != OperatorKind::CaputoDerivative)
        throw DomainError("solve_caputo: kind must be CaputoDerivative");
    const Grid& g = p.grid;
    auto w = pi_rectangle_weights(make_power_law(p.alpha), g);
    Eigen::VectorXd y(g.N + 1), G(g.N + 1);
    y[0] = p.y0;
    G[0] = p.g(0.0, p.y0);
    for (int n = 1; n <= g.N; ++n) {
        double hist = p.y0;
        for (int j = 1; j < n; ++j) hist += w->cell[n - j] * G[j];
        const double t = g.node(n);
        double yn = y[n - 1];
        double gap = 0.0;
        bool done = false;
        for (int it = 0; it < kFixedPointCap; ++it) {
            const double next = hist + w->cell[0] * p.g(t, yn);
            gap = std::abs(next - yn);
            yn = next;
            if (gap <= kFixedPointTol * (1.0 + std::abs(yn))) { done = true; break; }
        }
        if (!done) fixed_point_failure(n, gap);
        y[n] = yn;
        G[n] = p.g(t, yn);
    }
    return SampledFunction(g, std::move(y));
}

SampledFunction solve_pseudo(const FdeProblem& p) {
    p.validate();
    const bool cf = p.kind == OperatorKind::CfDerivative;
    if (!cf && p.kind != OperatorKind::AbcDerivative)
        throw DomainError("solve_pseudo: kind must be CFDerivative or AbcDerivative");
    const Grid& g = p.grid;
    const double norm = cf ? p.M : p.B;
    const double c = (1.0 - p.alpha) / norm;
    const double s = p.alpha / norm;

    Eigen::VectorXd y(g.N + 1), G(g.N + 1);

    // fixed point at t = 0: y(0) = y0 + c g(0, y(0))
    {
        double y0 = p.y0;
        double gap = 0.0;
        bool done = false;
        for (int it = 0; it < kFixedPointCap; ++it) {
            const double next = p.y0 + c * p.g(0.0, y0);
            gap = std::abs(next - y0);
            y0 = next;
            if (gap <= kFixedPointTol * (1.0 + std::abs(y0))) { done = true; break; }
        }
        if (!done) fixed_point_failure(0, gap);
        y[0] = y0;
        G[0] = p.g(0.0, y0);
    }

    if (cf) {
        // running integral of G by the trapezoid rule, implicit in G_n
        double acc = 0.0; // integral up to t_{n-1}
        for (int n = 1; n <= g.N; ++n) {
            const double t = g.node(n);
            double yn = y[n - 1];
            double gap = 0.0;
            bool done = false;
            for (int it = 0; it < kFixedPointCap; ++it) {
                const double Gn = p.g(t, yn);
                const double integral = acc + 0.5 * g.h * (G[n - 1] + Gn);
                const double next = p.y0 + c * Gn + s * integral;
                gap = std::abs(next - yn);
                yn = next;
                if (gap <= kFixedPointTol * (1.0 + std::abs(yn))) { done = true; break; }
            }
            if (!done) fixed_point_failure(n, gap);
            y[n] = yn;
            G[n] = p.g(t, yn);
            acc += 0.5 * g.h * (G[n - 1] + G[n]);
        }
    } else {
        auto w = pi_rectangle_weights(make_power_law(p.alpha), g);
        for (int n = 1; n <= g.N; ++n) {
            const double t = g.node(n);
            double hist = 0.0; // J^alpha with per-cell averages, cell n-1 split off
            for (int j = 0; j < n - 1; ++j)
                hist += w->cell[n - 1 - j] * 0.5 * (G[j] + G[j + 1]);
            double yn = y[n - 1];
            double gap = 0.0;
            bool done = false;
            for (int it = 0; it < kFixedPointCap; ++it) {
                const double Gn = p.g(t, yn);
                const double ja = hist + w->cell[0] * 0.5 * (G[n - 1] + Gn);
                const double next = p.y0 + c * Gn + s * ja;
                gap = std::abs(next - yn);
                yn = next;
                if (gap <= kFixedPointTol * (1.0 + std::abs(yn))) { done = true; break; }
            }
            if (!done) fixed_point_failure(n, gap);
            y[n] = yn;
            G[n] = p.g(t, yn);
        }
    }
    return SampledFunction(g, std::move(y));
}

ResidualReport residual_check(const FdeProblem& p, const SampledFunction& y) {
    p.validate();
    if (!y.grid.same_mesh(p.grid))
        throw DomainError("residual_check: solution grid does not match the problem grid");
    const Grid& g = p.grid;

    KernelSpec kern = make_power_law(1.0 - p.alpha);
    switch (p.kind) {
        case OperatorKind::CfDerivative: kern = make_cf_exp(p.alpha, p.M); break;
        case OperatorKind::AbcDerivative: kern = make_ab_ml(p.alpha, p.B); break;
        case OperatorKind::GenericDPhi: kern = *p.kernel; break;
        default: break;
    }
    SampledFunction dy = convolve_derivative(kern, FunctionInput::sampled(y), g);

    Eigen::VectorXd res(g.N + 1), pred(g.N + 1);
    const double g0 = p.g(0.0, y.values[0]);
    const bool bounded = is_bounded(kern);
    const double phi0 = bounded ? kernel_value(kern, 0.0) : 0.0;
    for (int n = 0; n <= g.N; ++n) {
        res[n] = dy.values[n] - p.g(g.node(n), y.values[n]);
        pred[n] = bounded && n > 0 ? -kernel_value(kern, g.node(n)) / phi0 * g0
                                   : (bounded ? -g0 : 0.0);
    }
    ResidualReport rep;
    rep.residual = SampledFunction(g, std::move(res));
    rep.residual.origin = dy.origin;
    rep.predicted_defect = SampledFunction(g, std::move(pred));
    double mism = 0.0;
    for (int n = 1; n < g.N; ++n)
        mism = std::max(mism, std::abs(rep.residual.values[n] - rep.predicted_defect.values[n]));
    rep.max_mismatch = mism;
    return rep;
}

SampledFunction reduce_cf_to_integer(const FdeProblem& p) {
    p.validate();
    if (p.kind != OperatorKind::CfDerivative)
        throw DomainError("reduce_cf_to_integer: kind must be CFDerivative");
    if (!p.g_t || !p.g_y)
        throw DomainError("reduce_cf_to_integer: needs the partials g_t and g_y");
    require_compatible_start(p, "reduce_cf_to_integer");

    const double c = (1.0 - p.alpha) / p.M;
    const double s = p.alpha / p.M;
    auto slope = [&](double t, double y) {
        const double den = 1.0 - c * p.g_y(t, y);
        if (std::abs(den) < 1e-10)
            throw DomainError("reduce_cf_to_integer: algebraic degeneracy, 1 - (1-a)/M g_y ~ 0");
        return (c * p.g_t(t, y) + s * p.g(t, y)) / den;
    };
    const Grid& g = p.grid;
    Eigen::VectorXd y(g.N + 1);
    y[0] = p.y0;
    for (int n = 0; n < g.N; ++n) {
        const double t = g.node(n);
        const double h = g.h;
        const double k1 = slope(t, y[n]);
        const double k2 = slope(t + 0.5 * h, y[n] + 0.5 * h * k1);
        const double k3 = slope(t + 0.5 * h, y[n] + 0.5 * h * k2);
        const double k4 = slope(t + h, y[n] + h * k3);
        y[n + 1] = y[n] + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return SampledFunction(g, std::move(y));
}

SampledFunction reduce_abc_to_caputo(const FdeProblem& p) {
    p.validate();
    if (p.kind != OperatorKind::AbcDerivative)
        throw DomainError("reduce_abc_to_caputo: kind must be AbcDerivative");
    require_compatible_start(p, "reduce_abc_to_caputo");

    const double c = (1.0 - p.alpha) / p.B;
    const double s = p.alpha / p.B;
    const Grid& g = p.grid;

    // recover y from the transformed state z = y - c g(t, y)
    auto y_from_z = [&](double t, double z, double guess) {
        double y = guess;
        double gap = 0.0;
        for (int it = 0; it < 60; ++it) {
            const double next = z + c * p.g(t, y);
            gap = std::abs(next - y);
            y = next;
            if (gap <= 1e-13 * (1.0 + std::abs(y))) return y;
        }
        fixed_point_failure(-1, gap);
    };

    auto w = pi_rectangle_weights(make_power_law(p.alpha), g);
    Eigen::VectorXd y(g.N + 1), z(g.N + 1), G(g.N + 1);
    y[0] = p.y0;
    z[0] = p.y0 - c * p.g(0.0, p.y0);
    G[0] = s * p.g(0.0, p.y0);
    for (int n = 1; n <= g.N; ++n) {
        // J^alpha of the transformed right-hand side with per-cell averages,
        // implicit in the newest value
        double hist = z[0];
        for (int j = 0; j < n - 1; ++j)
            hist += w->cell[n - 1 - j] * 0.5 * (G[j] + G[j + 1]);
        hist += w->cell[0] * 0.5 * G[n - 1];
        const double t = g.node(n);
        double zn = z[n - 1];
        double yn = y[n - 1];
        double gap = 0.0;
        bool done = false;
        for (int it = 0; it < kFixedPointCap; ++it) {
            yn = y_from_z(t, zn, yn);
            const double next = hist + w->cell[0] * 0.5 * s * p.g(t, yn);
            gap = std::abs(next - zn);
            zn = next;
            if (gap <= kFixedPointTol * (1.0 + std::abs(zn))) { done = true; break; }
        }
        if (!done) fixed_point_failure(n, gap);
        z[n] = zn;
        y[n] = y_from_z(t, zn, yn);
        G[n] = s * p.g(t, y[n]);
    }
    return SampledFunction(g, std::move(y));
}

} // namespace fracver
