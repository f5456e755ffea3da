#include "fracver/specfun.hpp"

#include "fracver/errors.hpp"
#include "support/mpfr_oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracver;

namespace {

// 500-digit series references (independent of both the library and the
// in-test MPFR oracle).
constexpr double kE05_m1 = 0.42758357615580700441;   // E_{1/2}(-1) = e erfc(1)
constexpr double kE05_m5 = 0.11070463773306862637;   // E_{1/2}(-5)
constexpr double kE05_m20 = 0.028174348741051319319; // E_{1/2}(-20)
constexpr double kE03_m5 = 0.13708086902027063889;   // E_{0.3}(-5)
constexpr double kE08_m20 = 0.011617250451432777958; // E_{0.8}(-20)
constexpr double kE052_m20 = 0.053989394226628256993; // E_{0.5,2}(-20)
constexpr double kE032_m5 = 0.18222783247195027923;  // E_{0.3,2}(-5)
constexpr double kPrab = 0.18531574377910596375;     // E^2_{0.5,0.5}(-0.3)

} // namespace

TEST_CASE("gamma basics") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    // reflection: Gamma(0.5)^2 = pi
    CHECK(gamma_fn(0.5) * gamma_fn(0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-14));
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-3.0), DomainError);
}

TEST_CASE("gamma against tgamma and mpfr on a grid") {
    for (double x = 0.1; x <= 25.0; x += 0.173) {
        CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
        CHECK(gamma_fn(x) == doctest::Approx(oracle::gamma_mpfr(x)).epsilon(1e-13));
    }
    for (double x = -0.9; x > -8.0; x -= 0.37)
        CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
}

TEST_CASE("rgamma zeros at poles") {
    CHECK(rgamma(0.0) == 0.0);
    CHECK(rgamma(-1.0) == 0.0);
    CHECK(rgamma(-7.0) == 0.0);
    CHECK(rgamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rgamma(-2.5) == doctest::Approx(1.0 / std::tgamma(-2.5)).epsilon(1e-12));
}

TEST_CASE("lower incomplete gamma") {
    // P(1, x) = 1 - e^{-x}; P(1/2, x) = erf(sqrt(x))
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        CHECK(lower_gamma_regularized(1.0, x) ==
              doctest::Approx(-std::expm1(-x)).epsilon(1e-13));
        CHECK(lower_gamma_regularized(0.5, x) ==
              doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-13));
    }
    CHECK(lower_gamma_regularized(0.5, 0.0) == 0.0);
    CHECK_THROWS_AS(lower_gamma_regularized(-1.0, 1.0), DomainError);
}

TEST_CASE("mittag-leffler trivial values") {
    CHECK(mittag_leffler(1.0, 1.0, 1.0) == doctest::Approx(M_E).epsilon(1e-14));
    CHECK(mittag_leffler(0.7, 2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mittag_leffler(1.0, 2.0, 1.0) == doctest::Approx(M_E - 1.0).epsilon(1e-14));
}

TEST_CASE("mittag-leffler derived identities") {
    // E_{1/2}(z) = exp(z^2) erfc(-z) on the negative axis
    CHECK(mittag_leffler(0.5, -1.0) == doctest::Approx(M_E * std::erfc(1.0)).epsilon(1e-12));
    CHECK(mittag_leffler(0.5, -1.0) == doctest::Approx(kE05_m1).epsilon(1e-13));
    for (double x : {0.3, 1.7, 3.0, 6.0, 12.0})
        CHECK(mittag_leffler(0.5, -x) ==
              doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-11));
}

TEST_CASE("mittag-leffler frozen references across the branch seams") {
    CHECK(mittag_leffler(0.5, -5.0) == doctest::Approx(kE05_m5).epsilon(1e-12));
    CHECK(mittag_leffler(0.5, -20.0) == doctest::Approx(kE05_m20).epsilon(1e-12));
    CHECK(mittag_leffler(0.3, -5.0) == doctest::Approx(kE03_m5).epsilon(1e-12));
    CHECK(mittag_leffler(0.8, -20.0) == doctest::Approx(kE08_m20).epsilon(1e-11));
    CHECK(mittag_leffler(0.5, 2.0, -20.0) == doctest::Approx(kE052_m20).epsilon(1e-11));
    CHECK(mittag_leffler(0.3, 2.0, -5.0) == doctest::Approx(kE032_m5).epsilon(1e-12));
}

TEST_CASE("mittag-leffler vs the extended-precision series oracle") {
    for (double a : {0.3, 0.5, 0.8, 1.0})
        for (double b : {1.0, 2.0})
            for (double z = -5.0; z <= 5.0 + 1e-9; z += 0.5)
                CHECK(mittag_leffler(a, b, z) ==
                      doctest::Approx(oracle::ml_series(a, b, z)).epsilon(5e-12));
}

TEST_CASE("E_{1,1} equals exp on [-30, 30]") {
    for (double z = -30.0; z <= 30.0 + 1e-9; z += 1.0) {
        const double e = std::exp(z);
        CHECK(std::abs(mittag_leffler(1.0, 1.0, z) - e) <= 1e-12 * std::max(1.0, std::abs(e)));
    }
}

TEST_CASE("recurrence E_{a,b}(z) = z E_{a,a+b}(z) + 1/Gamma(b)") {
    for (double a : {0.3, 0.5, 0.8})
        for (double b : {1.0, 2.0})
            for (double z : {-20.0, -12.0, -6.0, -3.0, -1.0, -0.2, 0.5, 2.0, 5.0}) {
                const double lhs = mittag_leffler(a, b, z);
                const double rhs = z * mittag_leffler(a, a + b, z) + rgamma(b);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
            }
}

TEST_CASE("complete monotonicity consequence: E_a(-x) decreasing in (0,1]") {
    for (double a : {0.3, 0.5, 0.8}) {
        double prev = 1.0;
        for (double x = 0.5; x <= 30.0 + 1e-9; x += 0.5) {
            const double v = mittag_leffler(a, -x);
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
        CHECK(mittag_leffler(a, 0.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("prabhakar reductions and oracle") {
    // gamma = 1 reduces to the two-parameter function
    for (double z = -3.0; z <= 3.0 + 1e-9; z += 0.25)
        CHECK(prabhakar_ml(0.5, 1.0, 1.0, z) ==
              doctest::Approx(mittag_leffler(0.5, 1.0, z)).epsilon(1e-12));
    // gamma = 0 leaves only the k = 0 term
    CHECK(prabhakar_ml(0.7, 1.3, 0.0, 3.2) == doctest::Approx(rgamma(1.3)).epsilon(1e-15));
    CHECK(prabhakar_ml(0.5, 0.5, 2.0, -0.3) == doctest::Approx(kPrab).epsilon(1e-12));
    CHECK(prabhakar_ml(0.5, 0.5, 2.0, -0.3) ==
          doctest::Approx(oracle::prabhakar_series(0.5, 0.5, 2.0, -0.3)).epsilon(1e-12));
    for (double z : {-2.0, -0.7, 0.4, 1.6})
        CHECK(prabhakar_ml(0.6, 0.8, -0.5, z) ==
              doctest::Approx(oracle::prabhakar_series(0.6, 0.8, -0.5, z)).epsilon(1e-11));
}

TEST_CASE("policy validation and failure modes") {
    MLPolicy bad;
    bad.series_radius = 60.0; // above the asymptotic radius
    CHECK_THROWS_AS(mittag_leffler(0.5, 1.0, 1.0, bad), DomainError);
    MLPolicy bad2;
    bad2.series_tol = -1.0;
    CHECK_THROWS_AS(mittag_leffler(0.5, 1.0, 1.0, bad2), DomainError);
    CHECK_THROWS_AS(mittag_leffler(-0.5, 1.0, 1.0), DomainError);
    // convergence failure surfaces as an error, not a wrong number
    CHECK_THROWS_AS(mittag_leffler(0.1, 1.0, 100.0), ConvergenceError);
}
