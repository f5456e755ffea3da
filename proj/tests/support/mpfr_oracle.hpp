#pragma once

// Brute-force extended-precision series oracle for the Mittag-Leffler family,
// independent of the library's evaluation paths. The working precision adapts
// to the cancellation scale exp(|z|^{1/alpha}) of the alternating series.

namespace oracle {

// E^{gamma}_{alpha,beta}(z) summed term by term with MPFR.
double prabhakar_series(double alpha, double beta, double gamma_p, double z);

inline double ml_series(double alpha, double beta, double z) {
    return prabhakar_series(alpha, beta, 1.0, z);
}

double gamma_mpfr(double x);

} // namespace oracle
