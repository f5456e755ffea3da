#include "fracver/diagnostics.hpp"

#include "fracver/convquad.hpp"
#include "fracver/errors.hpp"
#include "fracver/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fracver {

namespace {

// One half of a Sonine integral: the (possibly singular) kernel `sing` is
// integrated exactly per cell, the smooth partner is sampled at the mass
// centroid of each cell (falling back to the midpoint when the first moment
// of `sing` has no closed form).
double sonine_half(const KernelSpec& sing, const KernelSpec& smooth, double gap, double width,
                   int cells) {
    const double h = width / cells;
    const bool centroid = kernel_has_first_moment(sing);
    double sum = 0.0;
    double f_lo = 0.0, m_lo = 0.0;
    for (int j = 0; j < cells; ++j) {
        const double f_hi = kernel_antiderivative(sing, (j + 1) * h);
        const double w = f_hi - f_lo;
        double at = (j + 0.5) * h;
        if (centroid && w != 0.0) {
            const double m_hi = kernel_first_moment(sing, (j + 1) * h);
            const double c = (m_hi - m_lo) / w;
            if (c > j * h && c < (j + 1) * h) at = c;
            m_lo = m_hi;
        }
        sum += w * kernel_value(smooth, gap - at);
        f_lo = f_hi;
    }
    return sum;
}

double sonine_integral(const KernelSpec& phi, const KernelSpec& psi, double gap, int cells) {
    const int half = cells / 2;
    // r in [0, gap/2]: psi exact, phi sampled; then the mirrored half
    return sonine_half(psi, phi, gap, 0.5 * gap, half) +
           sonine_half(phi, psi, gap, 0.5 * gap, half);
}

} // namespace

SonineReport sonine_check(const KernelSpec& phi, const KernelSpec& psi,
                          std::vector<double> gaps, int subcells, double tolerance) {
    if (gaps.empty()) throw DomainError("sonine_check: no gaps given");
    for (double g : gaps)
        if (!(g > 0.0)) throw DomainError("sonine_check: gaps must be positive");
    std::sort(gaps.begin(), gaps.end(), std::greater<>());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    const int cells = std::max(256, subcells) & ~1;

    SonineReport rep;
    rep.gaps = gaps;
    rep.tolerance = tolerance;
    rep.integrals.reserve(gaps.size());
    bool all_one = true;
    for (double g : gaps) {
        const double v = sonine_integral(phi, psi, g, cells);
        if (!std::isfinite(v))
            throw ConvergenceError("sonine_check: quadrature failure at gap " + std::to_string(g));
        rep.integrals.push_back(v);
        if (std::abs(v - 1.0) > tolerance) all_one = false;
    }
    rep.classification = all_one ? SonineClass::SoninePair : SonineClass::DefectiveAtZero;

    if (!all_one) {
        // log-log slope over the smallest gaps
        const int m = std::min<std::size_t>(4, gaps.size());
        if (m >= 2) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int used = 0;
            for (int i = 0; i < m; ++i) {
                const std::size_t idx = gaps.size() - 1 - i;
                const double v = std::abs(rep.integrals[idx]);
                if (v <= 0.0) continue;
                const double x = std::log(gaps[idx]);
                const double y = std::log(v);
                sx += x; sy += y; sxx += x * x; sxy += x * y;
                ++used;
            }
            if (used >= 2)
                rep.decay_exponent = (used * sxy - sx * sy) / (used * sxx - sx * sx);
        }
    }
    return rep;
}

double laplace_transform_numeric(const KernelSpec& k, double s, double T) {
    if (!(s > 0.0)) throw DomainError("laplace_transform_numeric: s must be > 0");
    if (!(T > 0.0)) throw DomainError("laplace_transform_numeric: T must be > 0");
    if (kernel_domain_end(k) < T * (1.0 - 1e-12))
        throw DomainError("laplace_transform_numeric: T exceeds the kernel domain");

    if (const auto* c = std::get_if<CfExp>(&k)) {
        const double W = w_alpha(c->alpha);
        return c->M / (1.0 - c->alpha) * (-std::expm1(-(s + W) * T)) / (s + W);
    }
    if (const auto* p = std::get_if<PowerLaw>(&k))
        return lower_gamma_regularized(p->mu, s * T) * std::pow(s, -p->mu);

    // generic path: graded near 0 (integrable kernel singularities), adaptive
    // over the exponential decay
    const double cut = std::min(T, 1.0 / s);
    auto integrand = [&](double t, double dist0, double) {
        return std::exp(-s * t) * kernel_value(k, std::max(dist0, 1e-300));
    };
    double head = quad::tanh_sinh(integrand, 0.0, cut, 1e-12, 10);
    double tail = 0.0;
    if (cut < T) {
        const double t_stop = std::min(T, cut + 45.0 / s);
        tail = quad::adaptive_gauss(
            [&](double t) { return std::exp(-s * t) * kernel_value(k, t); }, cut, t_stop, 1e-12);
    }
    return head + tail;
}

LaplaceProbe laplace_probe(const KernelSpec& k, std::vector<double> s_values, double T) {
    LaplaceProbe p;
    p.s_values = std::move(s_values);
    for (double s : p.s_values) {
        const double ph = laplace_transform_numeric(k, s, T);
        p.phi_hat.push_back(ph);
        p.psi_hat.push_back(1.0 / (s * ph));
    }
    return p;
}

double final_value_check(const KernelSpec& k, double s) {
    if (!is_bounded(k))
        throw DomainError("final_value_check: kernel must be bounded on [0,T]");
    if (!(s > 0.0)) throw DomainError("final_value_check: s must be > 0");
    // truncation error of the zero extension ~ k(T) e^{-sT} / s < 1e-8 for sT >= 40
    const double T = std::min(40.0 / s, kernel_domain_end(k));
    return s * laplace_transform_numeric(k, s, T);
}

JpsiStar construct_jpsi_star(const KernelSpec& k) {
    if (const auto* c = std::get_if<CfExp>(&k)) {
        // psi_hat = (1-a)/M + a/(M s): a delta part plus a constant kernel
        return JpsiStar{(1.0 - c->alpha) / c->M, c->alpha / c->M, make_power_law(1.0)};
    }
    if (const auto* a = std::get_if<AbMl>(&k)) {
        // psi_hat = (1-a)/B + a/(B s^a): delta part plus the order-a power kernel
        return JpsiStar{(1.0 - a->alpha) / a->B, a->alpha / a->B, make_power_law(a->alpha)};
    }
    throw DomainError("construct_jpsi_star: closed form available only for CfExp and AbMl");
}

SampledFunction apply_jpsi_star(const JpsiStar& j, const FunctionInput& f, const Grid& g) {
    SampledFunction conv = convolve_value(j.psi_star, f, g);
    Eigen::VectorXd out(g.N + 1);
    for (int n = 0; n <= g.N; ++n)
        out[n] = j.inverse_phi0 * f.value_at_node(g, n) + j.kernel_scale * conv.values[n];
    return SampledFunction(g, std::move(out));
}

} // namespace fracver
