#include "fracver/specfun.hpp"

#include "fracver/errors.hpp"
#include "fracver/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fracver {

void MLPolicy::validate() const {
    if (!(series_radius < asymptotic_radius))
        throw DomainError("MLPolicy: series_radius must be < asymptotic_radius");
    if (!(series_tol > 0.0))
        throw DomainError("MLPolicy: series_tol must be positive");
    if (max_terms < 1)
        throw DomainError("MLPolicy: max_terms must be >= 1");
    if (asymptotic_terms < 1)
        throw DomainError("MLPolicy: asymptotic_terms must be >= 1");
}

double sin_pi(double x) {
    // reduce to [-0.5, 0.5] so integer arguments give exactly 0
    double r = std::remainder(x, 2.0); // r in [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(M_PI * r);
}

namespace {

constexpr double kSqrtTwoPi = 2.5066282746310005;

// Lanczos rational approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double gamma_positive(double x) {
    // x >= 0.5
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return kSqrtTwoPi * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

} // namespace

double gamma_fn(double x) {
    if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
    if (is_nonpositive_integer(x))
        throw DomainError("gamma_fn: pole at x = " + std::to_string(x));
    if (x >= 0.5) return gamma_positive(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

double rgamma(double x) {
    if (x >= 0.5) return 1.0 / gamma_positive(x);
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, entire; exact 0 at the poles
    const double s = sin_pi(x);
    if (s == 0.0) return 0.0;
    const double y = 1.0 - x;
    if (y > 170.0) {
        // avoid overflow in Gamma(1-x); combine in log space
        const double lg = std::lgamma(y);
        const double v = lg + std::log(std::abs(s) / M_PI);
        if (v > 700.0) return std::copysign(std::numeric_limits<double>::infinity(), s);
        return std::copysign(std::exp(v), s);
    }
    return s * gamma_positive(y) / M_PI;
}

double lower_gamma_regularized(double a, double x) {
    if (!(a > 0.0)) throw DomainError("lower_gamma_regularized: a must be > 0");
    if (x < 0.0) throw DomainError("lower_gamma_regularized: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // series for gamma(a,x)
        double ap = a, term = 1.0 / a, sum = term;
        for (int n = 0; n < 500; ++n) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16)
                return sum * std::exp(-x + a * std::log(x) - lg);
        }
        throw ConvergenceError("lower_gamma_regularized: series failed");
    }
    // continued fraction for Gamma(a,x), modified Lentz
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) {
            const double q = std::exp(-x + a * std::log(x) - lg) * h;
            return 1.0 - q;
        }
    }
    throw ConvergenceError("lower_gamma_regularized: continued fraction failed");
}

namespace {

// Plain power series sum_k z^k / Gamma(alpha k + beta), compensated summation.
// Returns true when the tolerance was reached within max_terms.
bool ml_series(double alpha, double beta, double z, double tol, int max_terms,
               double* out) {
    const double ax = std::abs(z);
    double sum = 0.0, comp = 0.0;
    int settled = 0;
    const double lz = ax > 0.0 ? std::log(ax) : 0.0;
    for (int k = 0; k < max_terms; ++k) {
        const double arg = alpha * k + beta;
        double term;
        if (arg > 0.5) {
            term = std::exp(k * lz - std::lgamma(arg));
        } else {
            const double rg = rgamma(arg);
            term = std::pow(ax, k) * std::abs(rg);
            if (rg < 0.0) term = -term;
        }
        if (z < 0.0 && (k & 1)) term = -term;
        // Kahan step
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (!std::isfinite(sum)) {
            *out = sum;
            return false;
        }
        // two consecutive small terms, so an isolated near-pole dip cannot
        // stop the sum early
        if (std::abs(term) <= tol * (std::abs(sum) + 1e-300)) {
            if (++settled >= 2 && k > 2) {
                *out = sum;
                return true;
            }
        } else {
            settled = 0;
        }
    }
    *out = sum;
    return false;
}

// E_{1,beta}(-x) for x >= 0 via the Kummer transformation:
// M(1,beta,-x) = e^{-x} M(beta-1, beta, x), whose series has positive ratios.
double ml_alpha1_negative(double beta, double x) {
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < 100000; ++k) {
        term *= x / k * ((beta - 1.0 + k - 1.0) / (beta - 1.0 + k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-x) * rgamma(beta) * sum;
}

// Branch-cut integral for E_{alpha,beta}(-x), 0 < alpha < 1, x > 0,
// valid for beta < alpha + 1:
//   E = (1/pi) int_0^inf e^{-r} r^{alpha-beta}
//         [ r^alpha sin(pi beta) + x sin(pi (beta - alpha)) ]
//         / ( r^{2 alpha} + 2 x r^alpha cos(pi alpha) + x^2 ) dr
double ml_cut_integral_base(double alpha, double beta, double x) {
    const double sb = sin_pi(beta);
    const double sba = sin_pi(beta - alpha);
    const double ca = std::cos(M_PI * alpha);
    auto integrand = [&](double r) -> double {
        if (r <= 0.0) return 0.0;
        const double ra = std::pow(r, alpha);
        const double den = ra * ra + 2.0 * x * ra * ca + x * x;
        return std::exp(-r) * std::pow(r, alpha - beta) * (ra * sb + x * sba) / den;
    };
    // near r = 0 the stable coordinate is the distance from the endpoint
    const double head = quad::tanh_sinh(
        [&](double, double dist_a, double) { return integrand(dist_a); }, 0.0, 1.0, 1e-14, 11);
    const double tail = quad::adaptive_gauss(integrand, 1.0, 60.0, 1e-14);
    return (head + tail) / M_PI;
}

double ml_cut_integral(double alpha, double beta, double x) {
    // step beta down until the integrand exponent alpha - beta stays well away
    // from the divergence boundary -1, then chain back up with
    // E_{a,b+a}(z) = (E_{a,b}(z) - 1/Gamma(b)) / z
    double bt = beta;
    int m = 0;
    while (bt >= alpha + 0.7) {
        bt -= alpha;
        ++m;
    }
    double e = ml_cut_integral_base(alpha, bt, x);
    const double z = -x;
    for (int i = 0; i < m; ++i) {
        e = (e - rgamma(bt)) / z;
        bt += alpha;
    }
    return e;
}

// Asymptotic expansion for z -> -inf, 0 < alpha <= 1:
//   E_{alpha,beta}(z) ~ -sum_{k>=1} z^{-k} / Gamma(beta - alpha k)
double ml_asymptotic(double alpha, double beta, double x, const MLPolicy& pol) {
    // optimal truncation: the envelope x^{-k} Gamma(alpha k + 1 - beta) turns
    // around at alpha k ~ x^{1/alpha}; summing up to that index leaves an
    // error of the order of the smallest term
    const double u = std::pow(x, 1.0 / alpha);
    const int k_opt = static_cast<int>((u + std::abs(beta) + 1.0) / alpha) + 2;
    const int cap = std::min(4096, std::max(pol.asymptotic_terms, k_opt));
    const double lx = std::log(x);
    double sum = 0.0;
    double last_mag = std::numeric_limits<double>::infinity();
    int settled = 0;
    for (int k = 1; k <= cap; ++k) {
        const double arg = beta - alpha * k; // may be large negative
        double term;
        const double pos = 1.0 - arg; // = alpha k - beta + 1
        if (pos > 30.0) {
            const double s = sin_pi(arg);
            if (s == 0.0) {
                term = 0.0;
            } else {
                const double lt = -k * lx + std::lgamma(pos) + std::log(std::abs(s) / M_PI);
                term = lt > 700.0 ? std::numeric_limits<double>::infinity()
                                  : std::copysign(std::exp(lt), s);
            }
        } else {
            term = std::exp(-k * lx) * rgamma(arg);
        }
        if ((k & 1) == 0) term = -term; // -z^{-k} = (-1)^{k+1} x^{-k}
        if (!std::isfinite(term)) break;
        sum += term;
        const double mag = std::abs(term);
        if (mag == 0.0) continue; // structural zero at a Gamma pole, not convergence
        last_mag = mag;
        if (mag <= 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++settled >= 2) return sum; // near-pole dips must not stop the sum
        } else {
            settled = 0;
        }
    }
    if (last_mag <= 1e-11 * (std::abs(sum) + 1e-300)) return sum;
    throw ConvergenceError("mittag_leffler: asymptotic expansion stalled at accuracy " +
                           std::to_string(last_mag));
}

} // namespace

double mittag_leffler(double alpha, double beta, double z, const MLPolicy& policy) {
    policy.validate();
    if (!(alpha > 0.0)) throw DomainError("mittag_leffler: alpha must be > 0");
    if (!std::isfinite(z)) throw DomainError("mittag_leffler: non-finite argument");
    if (z == 0.0) return rgamma(beta);

    if (z > 0.0) {
        double v;
        if (z <= policy.series_radius && ml_series(alpha, beta, z, policy.series_tol,
                                                   policy.max_terms, &v))
            return v;
        if (ml_series(alpha, beta, z, policy.series_tol,
                      std::max(2000, policy.max_terms), &v))
            return v;
        throw ConvergenceError("mittag_leffler: series did not converge for z = " +
                               std::to_string(z));
    }

    const double x = -z;
    if (std::abs(alpha - 1.0) < 1e-9) return ml_alpha1_negative(beta, x);

    const double u = std::pow(x, 1.0 / alpha);
    if (alpha > 1.0) {
        // cancellation scale e^u is mild here; the plain series suffices
        double v;
        if (u <= 4.5 && ml_series(alpha, beta, z, policy.series_tol,
                                  std::max(2000, policy.max_terms), &v))
            return v;
        if (u <= 4.5)
            throw ConvergenceError("mittag_leffler: series did not converge");
        throw ConvergenceError("mittag_leffler: large negative arguments unsupported for alpha > 1");
    }

    // 0 < alpha < 1 on the negative axis
    if (u <= 4.5 && x <= policy.series_radius) {
        double v;
        if (ml_series(alpha, beta, z, policy.series_tol, std::max(2000, policy.max_terms), &v))
            return v;
    }
    if (x >= policy.asymptotic_radius || u >= 40.0)
        return ml_asymptotic(alpha, beta, x, policy);
    return ml_cut_integral(alpha, beta, x);
}

double mittag_leffler(double alpha, double z, const MLPolicy& policy) {
    return mittag_leffler(alpha, 1.0, z, policy);
}

double prabhakar_ml(double alpha, double beta, double gamma_p, double z,
                    const MLPolicy& policy) {
    policy.validate();
    if (!(alpha > 0.0)) throw DomainError("prabhakar_ml: alpha must be > 0");
    if (gamma_p == 0.0) return rgamma(beta); // only the k = 0 term survives
    if (gamma_p == 1.0) return mittag_leffler(alpha, beta, z, policy);
    if (z == 0.0) return rgamma(beta);

    // series with the Pochhammer ratio Gamma(gamma+k)/Gamma(gamma) kept recursively
    const int cap = std::max(2000, policy.max_terms);
    double coeff = 1.0; // (gamma)_k / k!
    double zk = 1.0;
    double sum = 0.0, comp = 0.0;
    double max_mag = 0.0;
    int settled = 0;
    for (int k = 0; k < cap; ++k) {
        const double term = coeff * zk * rgamma(alpha * k + beta);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (!std::isfinite(sum))
            throw ConvergenceError("prabhakar_ml: series overflow");
        const double mag = std::abs(term);
        max_mag = std::max(max_mag, mag);
        if (mag <= policy.series_tol * (std::abs(sum) + 1e-300)) {
            if (++settled >= 2 && k > 2) {
                // require the cancellation level to leave enough accurate digits
                if (max_mag * 5e-15 > 1e3 * policy.series_tol * (std::abs(sum) + 1e-300))
                    throw ConvergenceError(
                        "prabhakar_ml: series cancellation exceeds working precision");
                return sum;
            }
        } else {
            settled = 0;
        }
        coeff *= (gamma_p + k) / (k + 1.0);
        zk *= z;
        if (!std::isfinite(coeff * zk))
            throw ConvergenceError("prabhakar_ml: series overflow");
    }
    throw ConvergenceError("prabhakar_ml: series did not converge");
}

} // namespace fracver
