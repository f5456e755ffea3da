#include "support/mpfr_oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

// Precision needed so that the largest series term times 2^-prec stays far
// below the target accuracy: the alternating series cancels down from
// ~exp(u), u = |z|^{1/alpha}.
mpfr_prec_t precision_for(double alpha, double z) {
    const double u = z >= 0.0 ? 0.0 : std::pow(-z, 1.0 / alpha);
    const double bits = 192.0 + 1.5 * u * 1.4427; // log2(e) ~ 1.4427
    return static_cast<mpfr_prec_t>(std::min(bits, 2.0e6));
}

} // namespace

double prabhakar_series(double alpha, double beta, double gamma_p, double z) {
    if (!(alpha > 0.0)) throw std::invalid_argument("oracle: alpha must be > 0");
    const mpfr_prec_t prec = precision_for(alpha, z);
    mpfr_t sum, term, zk, poch, garg, g, tmp, absterm, tol;
    mpfr_inits2(prec, sum, term, zk, poch, garg, g, tmp, absterm, tol, (mpfr_ptr)nullptr);

    mpfr_set_d(sum, 0.0, MPFR_RNDN);
    mpfr_set_d(zk, 1.0, MPFR_RNDN);   // z^k
    mpfr_set_d(poch, 1.0, MPFR_RNDN); // (gamma)_k / k!
    mpfr_set_d(tol, 0.0, MPFR_RNDN);

    const long max_terms = 2000000;
    long settled = 0;
    for (long k = 0; k < max_terms; ++k) {
        mpfr_set_d(garg, alpha, MPFR_RNDN);
        mpfr_mul_si(garg, garg, k, MPFR_RNDN);
        mpfr_add_d(garg, garg, beta, MPFR_RNDN);
        // skip terms where Gamma(alpha k + beta) sits on a pole
        if (mpfr_cmp_d(garg, 0.0) > 0 || !mpfr_integer_p(garg)) {
            mpfr_gamma(g, garg, MPFR_RNDN);
            mpfr_mul(term, poch, zk, MPFR_RNDN);
            mpfr_div(term, term, g, MPFR_RNDN);
            mpfr_add(sum, sum, term, MPFR_RNDN);
            mpfr_abs(absterm, term, MPFR_RNDN);
            mpfr_abs(tol, sum, MPFR_RNDN);
            mpfr_mul_2si(tol, tol, -static_cast<long>(prec) + 8, MPFR_RNDN);
            if (k > 4 && mpfr_cmp(absterm, tol) <= 0) {
                if (++settled >= 4) break;
            } else {
                settled = 0;
            }
        }
        mpfr_set_d(tmp, z, MPFR_RNDN);
        mpfr_mul(zk, zk, tmp, MPFR_RNDN);
        mpfr_set_d(tmp, gamma_p + static_cast<double>(k), MPFR_RNDN);
        mpfr_mul(poch, poch, tmp, MPFR_RNDN);
        mpfr_div_si(poch, poch, k + 1, MPFR_RNDN);
    }

    const double out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, term, zk, poch, garg, g, tmp, absterm, tol, (mpfr_ptr)nullptr);
    return out;
}

double gamma_mpfr(double x) {
    mpfr_t v;
    mpfr_init2(v, 256);
    mpfr_set_d(v, x, MPFR_RNDN);
    mpfr_gamma(v, v, MPFR_RNDN);
    const double out = mpfr_get_d(v, MPFR_RNDN);
    mpfr_clear(v);
    return out;
}

} // namespace oracle
