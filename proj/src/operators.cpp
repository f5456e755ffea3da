#include "fracver/operators.hpp"

#include "fracver/errors.hpp"

#include <cmath>

namespace fracver {

namespace {

void require_order(double alpha, bool allow_one, const char* who) {
    const bool ok = alpha > 0.0 && (allow_one ? alpha <= 1.0 : alpha < 1.0);
    if (!ok)
        throw DomainError(std::string(who) + ": order must lie in (0,1" +
                          (allow_one ? "]" : ")"));
}

Eigen::VectorXd node_values(const FunctionInput& f, const Grid& g) {
    Eigen::VectorXd v(g.N + 1);
    for (int j = 0; j <= g.N; ++j) v[j] = f.value_at_node(g, j);
    return v;
}

} // namespace

SampledFunction rl_integral(double alpha, const FunctionInput& f, const Grid& g) {
    require_order(alpha, true, "rl_integral");
    return convolve_value(make_power_law(alpha), f, g);
}

SampledFunction caputo_derivative(double alpha, const FunctionInput& f, const Grid& g) {
    require_order(alpha, false, "caputo_derivative");
    return convolve_derivative(make_power_law(1.0 - alpha), f, g);
}

SampledFunction rl_derivative(double alpha, const FunctionInput& f, const Grid& g) {
    require_order(alpha, false, "rl_derivative");
    SampledFunction r = caputo_derivative(alpha, f, g);
    const double f0 = f.value_at_node(g, 0);
    if (f0 != 0.0) {
        const double c = f0 * rgamma(1.0 - alpha);
        for (int n = 1; n <= g.N; ++n) r.values[n] += c * std::pow(g.node(n), -alpha);
        r.origin = OriginMark::Undefined; // t^{-alpha} term diverges at 0+
    }
    return r;
}

SampledFunction cf_derivative(double alpha, const FunctionInput& f, const Grid& g, double M) {
    require_order(alpha, false, "cf_derivative");
    return convolve_derivative(make_cf_exp(alpha, M), f, g);
}

SampledFunction abc_derivative(double alpha, const FunctionInput& f, const Grid& g, double B) {
    require_order(alpha, false, "abc_derivative");
    return convolve_derivative(make_ab_ml(alpha, B), f, g);
}

SampledFunction cf_integral(double alpha, const FunctionInput& f, const Grid& g, double M) {
    require_order(alpha, false, "cf_integral");
    if (!(M > 0.0)) throw DomainError("cf_integral: M must be > 0");
    const double c = (1.0 - alpha) / M;
    SampledFunction run = convolve_value(make_power_law(1.0), f, g);
    Eigen::VectorXd v = node_values(f, g);
    Eigen::VectorXd out = c * v + (alpha / M) * run.values;
    SampledFunction r(g, std::move(out));
    if (f.has_value_fn() && f.has_deriv_fn()) {
        Eigen::VectorXd d(g.N + 1);
        for (int j = 0; j <= g.N; ++j)
            d[j] = c * f.deriv(g.node(j)) + (alpha / M) * f.value(g.node(j));
        r.deriv_values = std::move(d);
    }
    return r;
}

SampledFunction ab_integral(double alpha, const FunctionInput& f, const Grid& g, double B) {
    require_order(alpha, false, "ab_integral");
    if (!(B > 0.0)) throw DomainError("ab_integral: B must be > 0");
    const double c = (1.0 - alpha) / B;
    SampledFunction frac = rl_integral(alpha, f, g);
    Eigen::VectorXd v = node_values(f, g);
    Eigen::VectorXd out = c * v + (alpha / B) * frac.values;
    return SampledFunction(g, std::move(out));
}

SampledFunction generic_dphi(const KernelSpec& k, const FunctionInput& f, const Grid& g) {
    return convolve_derivative(k, f, g);
}

SampledFunction prabhakar_integral(double alpha, double beta, double gamma_p, double lambda,
                                   const FunctionInput& f, const Grid& g) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw DomainError("prabhakar_integral: alpha and beta must be > 0");
    return convolve_value(make_prabhakar_kernel(alpha, beta, gamma_p, lambda), f, g);
}

SampledFunction prabhakar_derivative(double alpha, double beta, double gamma_p, double lambda,
                                     const FunctionInput& f, const Grid& g) {
    if (!(alpha > 0.0)) throw DomainError("prabhakar_derivative: alpha must be > 0");
    require_order(beta, false, "prabhakar_derivative");
    // kernel s^{-beta} E^{-gamma}_{alpha,1-beta}(lambda s^alpha)
    return convolve_derivative(make_prabhakar_kernel(alpha, 1.0 - beta, -gamma_p, lambda), f, g);
}

SampledFunction cf_derivative_byparts(double alpha, const FunctionInput& f, const Grid& g,
                                      double M) {
    require_order(alpha, false, "cf_derivative_byparts");
    const double W = w_alpha(alpha);
    const double scale = M / (1.0 - alpha);
    SampledFunction conv = convolve_value(make_cf_exp(alpha, M), f, g);
    const double f0 = f.value_at_node(g, 0);
    Eigen::VectorXd v = node_values(f, g);
    Eigen::VectorXd out(g.N + 1);
    for (int n = 0; n <= g.N; ++n)
        out[n] = scale * (v[n] - std::exp(-W * g.node(n)) * f0) - W * conv.values[n];
    out[0] = 0.0; // exact: the bracket vanishes at t = 0
    SampledFunction r(g, std::move(out));
    r.origin = OriginMark::LimitZero;
    return r;
}

SampledFunction abc_derivative_byparts(double alpha, const FunctionInput& f, const Grid& g,
                                       double B) {
    require_order(alpha, false, "abc_derivative_byparts");
    const double W = w_alpha(alpha);
    const double scale = B / (1.0 - alpha);
    // (t-tau)^{alpha-1} E_{alpha,alpha}(-W (t-tau)^alpha) is the Prabhakar kernel
    // with beta = alpha, gamma = 1, lambda = -W
    SampledFunction conv =
        convolve_value(make_prabhakar_kernel(alpha, alpha, 1.0, -W), f, g);
    const double f0 = f.value_at_node(g, 0);
    Eigen::VectorXd v = node_values(f, g);
    Eigen::VectorXd out(g.N + 1);
    for (int n = 0; n <= g.N; ++n) {
        const double ml = n == 0 ? 1.0
                                 : mittag_leffler(alpha, -W * std::pow(g.node(n), alpha));
        out[n] = scale * (v[n] - ml * f0 - W * conv.values[n]);
    }
    out[0] = 0.0;
    SampledFunction r(g, std::move(out));
    r.origin = OriginMark::LimitZero;
    return r;
}

namespace {

void require_analytic(const FunctionInput& f, const char* who) {
    if (!f.has_value_fn() || !f.has_deriv_fn())
        throw DomainError(std::string(who) + ": needs analytic value and derivative closures");
    if (!f.deriv_power_terms.empty())
        throw DomainError(std::string(who) + ": inputs with singular derivatives unsupported");
}

} // namespace

FunctionInput rl_integral_input(double alpha, const FunctionInput& f, int subcells) {
    require_order(alpha, true, "rl_integral_input");
    require_analytic(f, "rl_integral_input");
    const KernelSpec kern = make_power_law(alpha);
    const double f0 = f.value(0.0);
    const double df0 = f.deriv(0.0);
    auto fval = f.value;
    auto fder = f.deriv;
    FunctionInput out;
    out.value = [kern, fval, subcells](double tau) {
        return convolve_value_at(kern, fval, tau, subcells);
    };
    const double c0 = f0 * rgamma(alpha);
    out.deriv = [kern, fder, subcells, c0, alpha](double tau) {
        const double sing = tau > 0.0 ? c0 * std::pow(tau, alpha - 1.0) : 0.0;
        return sing + convolve_value_at(kern, fder, tau, subcells);
    };
    if (f0 != 0.0) out.deriv_power_terms.push_back({c0, alpha - 1.0});
    if (df0 != 0.0) out.deriv_power_terms.push_back({df0 * rgamma(alpha + 1.0), alpha});
    return out;
}

FunctionInput cf_integral_input(double alpha, const FunctionInput& f, double M, int subcells) {
    require_order(alpha, false, "cf_integral_input");
    require_analytic(f, "cf_integral_input");
    const double c = (1.0 - alpha) / M;
    const double s = alpha / M;
    const KernelSpec unit = make_power_law(1.0);
    auto fval = f.value;
    auto fder = f.deriv;
    FunctionInput out;
    out.value = [c, s, unit, fval, subcells](double tau) {
        return c * fval(tau) + s * convolve_value_at(unit, fval, tau, subcells);
    };
    out.deriv = [c, s, fval, fder](double tau) { return c * fder(tau) + s * fval(tau); };
    return out;
}

FunctionInput ab_integral_input(double alpha, const FunctionInput& f, double B, int subcells) {
    require_order(alpha, false, "ab_integral_input");
    require_analytic(f, "ab_integral_input");
    const double c = (1.0 - alpha) / B;
    const double s = alpha / B;
    const KernelSpec kern = make_power_law(alpha);
    const double f0 = f.value(0.0);
    const double df0 = f.deriv(0.0);
    auto fval = f.value;
    auto fder = f.deriv;
    FunctionInput out;
    out.value = [c, s, kern, fval, subcells](double tau) {
        return c * fval(tau) + s * convolve_value_at(kern, fval, tau, subcells);
    };
    const double c0 = s * f0 * rgamma(alpha);
    out.deriv = [c, s, kern, fder, subcells, c0, alpha](double tau) {
        const double sing = tau > 0.0 ? c0 * std::pow(tau, alpha - 1.0) : 0.0;
        return c * fder(tau) + sing + s * convolve_value_at(kern, fder, tau, subcells);
    };
    if (f0 != 0.0) out.deriv_power_terms.push_back({c0, alpha - 1.0});
    if (df0 != 0.0) out.deriv_power_terms.push_back({s * df0 * rgamma(alpha + 1.0), alpha});
    return out;
}

} // namespace fracver
