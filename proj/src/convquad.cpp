#include "fracver/convquad.hpp"

#include "fracver/errors.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace fracver {

namespace {

std::string weights_key(const KernelSpec& k, const Grid& g, bool trap) {
    char buf[256];
    const int kind = static_cast<int>(k.index());
    double p[4] = {0, 0, 0, 0};
    if (const auto* pl = std::get_if<PowerLaw>(&k)) p[0] = pl->mu;
    if (const auto* c = std::get_if<CfExp>(&k)) { p[0] = c->alpha; p[1] = c->M; }
    if (const auto* a = std::get_if<AbMl>(&k)) { p[0] = a->alpha; p[1] = a->B; }
    if (const auto* pr = std::get_if<PrabhakarKernel>(&k)) {
        p[0] = pr->alpha; p[1] = pr->beta; p[2] = pr->gamma_p; p[3] = pr->lambda;
    }
    if (std::holds_alternative<Tabulated>(k)) return {}; // not cached
    std::snprintf(buf, sizeof buf, "%d|%.17g|%.17g|%.17g|%.17g|%d|%.17g|%d",
                  kind, p[0], p[1], p[2], p[3], g.N, g.h, trap ? 1 : 0);
    return buf;
}

std::shared_ptr<const ConvolutionWeights> build_weights(const KernelSpec& k, const Grid& g,
                                                        bool trap) {
    if (kernel_domain_end(k) < g.T * (1.0 - 1e-12))
        throw DomainError("pi_rectangle_weights: kernel not defined on the whole grid");
    auto w = std::make_shared<ConvolutionWeights>();
    w->grid = g;
    w->anti.resize(g.N + 1);
    w->cell.resize(g.N);
    for (int m = 0; m <= g.N; ++m) w->anti[m] = kernel_antiderivative(k, g.node(m));
    for (int m = 1; m <= g.N; ++m) w->cell[m - 1] = w->anti[m] - w->anti[m - 1];
    if (trap) {
        if (!kernel_has_first_moment(k))
            throw DomainError("pi_rectangle_weights: trapezoid moments unavailable for this kernel");
        w->has_trapezoid = true;
        w->trap_left.resize(g.N);
        w->trap_right.resize(g.N);
        double m1_prev = 0.0;
        for (int m = 1; m <= g.N; ++m) {
            const double m1 = kernel_first_moment(k, g.node(m));
            const double dF = w->cell[m - 1];
            const double dM = m1 - m1_prev;
            const double s1 = g.node(m - 1);
            const double s2 = g.node(m);
            // weight of d(t_{j}) is taken against (s - s1)/h, of d(t_{j+1}) against (s2 - s)/h
            w->trap_left[m - 1] = (dM - s1 * dF) / g.h;
            w->trap_right[m - 1] = (s2 * dF - dM) / g.h;
            m1_prev = m1;
        }
    }
    return w;
}

std::shared_mutex g_cache_mutex;
std::map<std::string, std::shared_ptr<const ConvolutionWeights>> g_cache;

std::shared_ptr<const ConvolutionWeights> weights_for(const KernelSpec& k, const Grid& g,
                                                      bool trap) {
    const std::string key = weights_key(k, g, trap);
    if (key.empty()) return build_weights(k, g, trap);
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    auto w = build_weights(k, g, trap);
    std::unique_lock lock(g_cache_mutex);
    auto [it, inserted] = g_cache.emplace(key, w);
    return it->second;
}

OriginMark origin_mark_for(const KernelSpec& k) {
    return is_bounded(k) ? OriginMark::LimitZero : OriginMark::Undefined;
}

} // namespace

std::shared_ptr<const ConvolutionWeights> pi_rectangle_weights(const KernelSpec& k,
                                                               const Grid& g) {
    return weights_for(k, g, false);
}

SampledFunction convolve_derivative(const KernelSpec& k, const FunctionInput& f,
                                    const Grid& g, bool trapezoid) {
    const int N = g.N;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(N + 1);

    if (f.has_deriv_fn()) {
        auto w = weights_for(k, g, false);
        // midpoint samples of the regular part of f'
        Eigen::VectorXd rho(N);
        for (int j = 0; j < N; ++j) {
            const double m = g.midpoint(j);
            double v = f.deriv(m);
            for (const auto& pt : f.deriv_power_terms) v -= pt.coeff * std::pow(m, pt.expo);
            rho[j] = v;
        }
        for (int n = 1; n <= N; ++n) {
            double s = w->cell.head(n).reverse().dot(rho.head(n));
            for (const auto& pt : f.deriv_power_terms)
                s += pt.coeff * kernel_power_convolution(k, pt.expo + 1.0, g.node(n));
            out[n] = s;
        }
    } else if (f.is_sampled()) {
        const SampledFunction& sf = *f.samples;
        if (!sf.grid.same_mesh(g))
            throw DomainError("convolve_derivative: sample grid does not match");
        if (trapezoid) {
            if (!sf.deriv_values)
                throw DomainError("convolve_derivative: trapezoid weights need nodal derivatives");
            auto w = weights_for(k, g, true);
            const Eigen::VectorXd& d = *sf.deriv_values;
            for (int n = 1; n <= N; ++n) {
                double s = 0.0;
                for (int j = 0; j < n; ++j)
                    s += w->trap_left[n - j - 1] * d[j] + w->trap_right[n - j - 1] * d[j + 1];
                out[n] = s;
            }
        } else {
            auto w = weights_for(k, g, false);
            Eigen::VectorXd d(N);
            if (sf.deriv_values) {
                for (int j = 0; j < N; ++j)
                    d[j] = 0.5 * ((*sf.deriv_values)[j] + (*sf.deriv_values)[j + 1]);
            } else {
                for (int j = 0; j < N; ++j)
                    d[j] = (sf.values[j + 1] - sf.values[j]) / g.h;
            }
            for (int n = 1; n <= N; ++n)
                out[n] = w->cell.head(n).reverse().dot(d.head(n));
        }
    } else {
        throw DomainError("convolve_derivative: input carries no derivative information");
    }

    SampledFunction r(g, std::move(out));
    r.origin = origin_mark_for(k);
    return r;
}

SampledFunction convolve_value(const KernelSpec& k, const FunctionInput& f, const Grid& g) {
    const int N = g.N;
    auto w = weights_for(k, g, false);
    Eigen::VectorXd v(N);
    if (f.has_value_fn()) {
        for (int j = 0; j < N; ++j) v[j] = f.value(g.midpoint(j));
    } else if (f.is_sampled()) {
        const SampledFunction& sf = *f.samples;
        if (!sf.grid.same_mesh(g))
            throw DomainError("convolve_value: sample grid does not match");
        for (int j = 0; j < N; ++j) v[j] = 0.5 * (sf.values[j] + sf.values[j + 1]);
    } else {
        throw DomainError("convolve_value: input carries no values");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(N + 1);
    for (int n = 1; n <= N; ++n)
        out[n] = w->cell.head(n).reverse().dot(v.head(n));
    SampledFunction r(g, std::move(out));
    r.origin = OriginMark::LimitZero;
    return r;
}

SampledFunction differentiate_samples(const SampledFunction& f) {
    const int N = f.grid.N;
    if (N < 2) throw DomainError("differentiate_samples: need at least two cells");
    const double h = f.grid.h;
    const Eigen::VectorXd& v = f.values;
    Eigen::VectorXd d(N + 1);
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (int j = 1; j < N; ++j) d[j] = (v[j + 1] - v[j - 1]) / (2.0 * h);
    d[N] = (3.0 * v[N] - 4.0 * v[N - 1] + v[N - 2]) / (2.0 * h);
    SampledFunction r = f;
    r.deriv_values = std::move(d);
    return r;
}

double convolve_value_at(const KernelSpec& k, const std::function<double(double)>& g,
                         double tau, int cells) {
    if (tau < 0.0) throw DomainError("convolve_value_at: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    const double h = tau / cells;
    double sum = 0.0;
    double f_hi = kernel_antiderivative(k, tau);
    for (int j = 0; j < cells; ++j) {
        const double f_lo = j + 1 < cells ? kernel_antiderivative(k, tau - (j + 1) * h) : 0.0;
        sum += (f_hi - f_lo) * g((j + 0.5) * h);
        f_hi = f_lo;
    }
    return sum;
}

} // namespace fracver
