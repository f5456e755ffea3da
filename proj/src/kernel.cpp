#include "fracver/kernel.hpp"

#include "fracver/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fracver {

double w_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("w_alpha: alpha must lie in (0,1)");
    return alpha / (1.0 - alpha);
}

double normalization_one_at_endpoints(double alpha) {
    return 1.0 - alpha + alpha / gamma_fn(alpha);
}

KernelSpec make_power_law(double mu) {
    if (!(mu > 0.0)) throw DomainError("PowerLaw: mu must be > 0");
    return PowerLaw{mu};
}

KernelSpec make_cf_exp(double alpha, double M) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("CfExp: alpha must lie in (0,1)");
    if (!(M > 0.0)) throw DomainError("CfExp: M must be > 0");
    return CfExp{alpha, M};
}

KernelSpec make_ab_ml(double alpha, double B) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("AbMl: alpha must lie in (0,1)");
    if (!(B > 0.0)) throw DomainError("AbMl: B must be > 0");
    return AbMl{alpha, B};
}

KernelSpec make_prabhakar_kernel(double alpha, double beta, double gamma_p, double lambda) {
    if (!(alpha > 0.0)) throw DomainError("PrabhakarKernel: alpha must be > 0");
    if (!(beta > 0.0)) throw DomainError("PrabhakarKernel: beta must be > 0");
    return PrabhakarKernel{alpha, beta, gamma_p, lambda};
}

KernelSpec make_tabulated(SampledFunction samples) {
    samples.validate();
    const int n = samples.grid.N;
    Eigen::VectorXd cum(n + 1);
    cum[0] = 0.0;
    // trapezoid is exact for the linear interpolant
    for (int j = 0; j < n; ++j)
        cum[j + 1] = cum[j] + 0.5 * samples.grid.h * (samples.values[j] + samples.values[j + 1]);
    return Tabulated{std::move(samples), std::move(cum)};
}

namespace {

double tab_value(const Tabulated& t, double s) {
    const Grid& g = t.samples.grid;
    if (s < 0.0 || s > g.T * (1.0 + 1e-12))
        throw DomainError("Tabulated kernel: argument outside tabulated range");
    const double u = std::min(s / g.h, static_cast<double>(g.N));
    const int j = std::min(static_cast<int>(u), g.N - 1);
    const double w = u - j;
    return (1.0 - w) * t.samples.values[j] + w * t.samples.values[j + 1];
}

double tab_antiderivative(const Tabulated& t, double s) {
    const Grid& g = t.samples.grid;
    if (s < 0.0 || s > g.T * (1.0 + 1e-12))
        throw DomainError("Tabulated kernel: argument outside tabulated range");
    const double u = std::min(s / g.h, static_cast<double>(g.N));
    const int j = std::min(static_cast<int>(u), g.N - 1);
    const double ds = s - j * g.h;
    const double vj = t.samples.values[j];
    const double slope = (t.samples.values[j + 1] - vj) / g.h;
    return t.cumulative[j] + vj * ds + 0.5 * slope * ds * ds;
}

} // namespace

double kernel_value(const KernelSpec& k, double s) {
    if (s < 0.0) throw DomainError("kernel_value: s must be >= 0");
    return std::visit(
        [&](const auto& kk) -> double {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                if (s == 0.0) {
                    if (kk.mu < 1.0)
                        throw DomainError("kernel_value: power-law kernel is singular at 0");
                    if (kk.mu == 1.0) return 1.0;
                    return 0.0;
                }
                return std::pow(s, kk.mu - 1.0) * rgamma(kk.mu);
            } else if constexpr (std::is_same_v<T, CfExp>) {
                return kk.M / (1.0 - kk.alpha) * std::exp(-w_alpha(kk.alpha) * s);
            } else if constexpr (std::is_same_v<T, AbMl>) {
                return kk.B / (1.0 - kk.alpha) *
                       mittag_leffler(kk.alpha, -w_alpha(kk.alpha) * std::pow(s, kk.alpha));
            } else if constexpr (std::is_same_v<T, PrabhakarKernel>) {
                if (s == 0.0) {
                    if (kk.beta < 1.0)
                        throw DomainError("kernel_value: Prabhakar kernel is singular at 0");
                    if (kk.beta == 1.0) return prabhakar_ml(kk.alpha, 1.0, kk.gamma_p, 0.0);
                    return 0.0;
                }
                return std::pow(s, kk.beta - 1.0) *
                       prabhakar_ml(kk.alpha, kk.beta, kk.gamma_p,
                                    kk.lambda * std::pow(s, kk.alpha));
            } else {
                return tab_value(kk, s);
            }
        },
        k);
}

double kernel_antiderivative(const KernelSpec& k, double s) {
    if (s < 0.0) throw DomainError("kernel_antiderivative: s must be >= 0");
    if (s == 0.0) return 0.0;
    return std::visit(
        [&](const auto& kk) -> double {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                return std::pow(s, kk.mu) * rgamma(kk.mu + 1.0);
            } else if constexpr (std::is_same_v<T, CfExp>) {
                const double W = w_alpha(kk.alpha);
                return kk.M / (1.0 - kk.alpha) * (-std::expm1(-W * s)) / W;
            } else if constexpr (std::is_same_v<T, AbMl>) {
                const double W = w_alpha(kk.alpha);
                return kk.B / (1.0 - kk.alpha) * s *
                       mittag_leffler(kk.alpha, 2.0, -W * std::pow(s, kk.alpha));
            } else if constexpr (std::is_same_v<T, PrabhakarKernel>) {
                return std::pow(s, kk.beta) *
                       prabhakar_ml(kk.alpha, kk.beta + 1.0, kk.gamma_p,
                                    kk.lambda * std::pow(s, kk.alpha));
            } else {
                return tab_antiderivative(kk, s);
            }
        },
        k);
}

bool kernel_has_first_moment(const KernelSpec& k) {
    return !std::holds_alternative<Tabulated>(k);
}

double kernel_first_moment(const KernelSpec& k, double s) {
    if (s < 0.0) throw DomainError("kernel_first_moment: s must be >= 0");
    if (s == 0.0) return 0.0;
    if (const auto* p = std::get_if<PowerLaw>(&k))
        return std::pow(s, p->mu + 1.0) / (p->mu + 1.0) * rgamma(p->mu);
    if (const auto* c = std::get_if<CfExp>(&k)) {
        const double W = w_alpha(c->alpha);
        // int_0^s r e^{-W r} dr = (1 - (1 + W s) e^{-W s}) / W^2
        return c->M / (1.0 - c->alpha) * (1.0 - (1.0 + W * s) * std::exp(-W * s)) / (W * W);
    }
    if (const auto* a = std::get_if<AbMl>(&k)) {
        // int_0^s r E_a(y r^a)-type terms reduce to three-parameter functions:
        // s^2 [ a (E^2_{a,3}(y) - E_{a,3}(y)) + E_{a,3}(y) ], y = -W s^a
        const double W = w_alpha(a->alpha);
        const double y = -W * std::pow(s, a->alpha);
        const double e13 = mittag_leffler(a->alpha, 3.0, y);
        const double e23 = prabhakar_ml(a->alpha, 3.0, 2.0, y);
        return a->B / (1.0 - a->alpha) * s * s * (a->alpha * (e23 - e13) + e13);
    }
    const auto& pr = std::get<PrabhakarKernel>(k);
    // s^{b+1} [ b E^g_{a,b+2}(y) + a g y E^{g+1}_{a,a+b+2}(y) ], y = lambda s^a
    const double y = pr.lambda * std::pow(s, pr.alpha);
    return std::pow(s, pr.beta + 1.0) *
           (pr.beta * prabhakar_ml(pr.alpha, pr.beta + 2.0, pr.gamma_p, y) +
            pr.alpha * pr.gamma_p * y *
                prabhakar_ml(pr.alpha, pr.alpha + pr.beta + 2.0, pr.gamma_p + 1.0, y));
}

double kernel_power_convolution(const KernelSpec& k, double nu, double t) {
    if (!(nu > 0.0)) throw DomainError("kernel_power_convolution: nu must be > 0");
    if (t < 0.0) throw DomainError("kernel_power_convolution: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double gnu = gamma_fn(nu);
    return std::visit(
        [&](const auto& kk) -> double {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                return gnu * std::pow(t, kk.mu + nu - 1.0) * rgamma(kk.mu + nu);
            } else if constexpr (std::is_same_v<T, CfExp>) {
                const double W = w_alpha(kk.alpha);
                return kk.M / (1.0 - kk.alpha) * gnu * std::pow(t, nu) *
                       mittag_leffler(1.0, nu + 1.0, -W * t);
            } else if constexpr (std::is_same_v<T, AbMl>) {
                const double W = w_alpha(kk.alpha);
                return kk.B / (1.0 - kk.alpha) * gnu * std::pow(t, nu) *
                       mittag_leffler(kk.alpha, nu + 1.0, -W * std::pow(t, kk.alpha));
            } else if constexpr (std::is_same_v<T, PrabhakarKernel>) {
                return gnu * std::pow(t, kk.beta + nu - 1.0) *
                       prabhakar_ml(kk.alpha, kk.beta + nu, kk.gamma_p,
                                    kk.lambda * std::pow(t, kk.alpha));
            } else {
                throw DomainError("kernel_power_convolution: unavailable for tabulated kernels");
            }
        },
        k);
}

bool is_bounded(const KernelSpec& k) {
    return std::visit(
        [](const auto& kk) -> bool {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, PowerLaw>) return kk.mu >= 1.0;
            else if constexpr (std::is_same_v<T, PrabhakarKernel>) return kk.beta >= 1.0;
            else return true;
        },
        k);
}

double kernel_domain_end(const KernelSpec& k) {
    if (const auto* t = std::get_if<Tabulated>(&k)) return t->samples.grid.T;
    return std::numeric_limits<double>::infinity();
}

} // namespace fracver
