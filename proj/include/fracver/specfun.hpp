#pragma once

namespace fracver {

// Evaluation controls for the Mittag-Leffler family.
struct MLPolicy {
    double series_radius = 10.0;     // |z| bound for the plain power-series path
    double asymptotic_radius = 50.0; // -z bound past which the asymptotic expansion is used
    double series_tol = 1e-15;
    int max_terms = 500;
    int asymptotic_terms = 30;

    void validate() const; // throws DomainError when the invariants fail
};

// Gamma(x). Non-positive integers are poles and are rejected.
double gamma_fn(double x);

// 1/Gamma(x); returns exactly 0 at the poles of Gamma.
double rgamma(double x);

// sin(pi x) with exact zeros at integer x.
double sin_pi(double x);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a), a > 0, x >= 0.
double lower_gamma_regularized(double a, double x);

// Two-parameter Mittag-Leffler function E_{alpha,beta}(z), real z, alpha > 0.
double mittag_leffler(double alpha, double beta, double z, const MLPolicy& policy = {});

// One-parameter E_alpha(z) = E_{alpha,1}(z).
double mittag_leffler(double alpha, double z, const MLPolicy& policy = {});

// Three-parameter (Prabhakar) function E^gamma_{alpha,beta}(z), real z, alpha > 0.
// gamma_p = 0 gives 1/Gamma(beta) exactly; gamma_p = 1 reduces to mittag_leffler.
double prabhakar_ml(double alpha, double beta, double gamma_p, double z,
                    const MLPolicy& policy = {});

} // namespace fracver
