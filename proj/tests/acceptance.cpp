// Acceptance suite: one line per criterion, nonzero exit on unexpected failure.
// Criterion 7 contains one sub-check that is mathematically unattainable as
// stated (see the final-value-abml registry entry); it is reported honestly as
// an expected failure and does not gate the suite.

#include "fracver/claims.hpp"
#include "fracver/diagnostics.hpp"
#include "fracver/heat1d.hpp"
#include "fracver/operators.hpp"
#include "support/mpfr_oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace fracver;

namespace {

int g_failures = 0;

void line(int criterion, bool pass, const std::string& what, double value, double bound,
          bool lower = false, bool expected_fail = false) {
    const char* tag = pass ? "PASS" : (expected_fail ? "XFAIL" : "FAIL");
    std::printf("[%s] criterion %02d: %-58s value=%-12.4g %s %.4g\n", tag, criterion,
                what.c_str(), value, lower ? ">=" : "<=", bound);
    if (!pass && !expected_fail) ++g_failures;
}

bool claim_line(int criterion, const std::string& id) {
    const ClaimReport r = run_claim(id);
    line(criterion, r.pass, id, r.value, r.info.tolerance, r.info.lower_bound);
    return r.pass;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void criterion_1() {
    // oracle values first (precomputation), then the timed production sweep
    struct Point { double a, b, z, want; };
    std::vector<Point> pts;
    for (double a : {0.3, 0.5, 0.8, 1.0})
        for (double b : {1.0, 2.0})
            for (int i = 0; i <= 50; ++i) {
                const double z = -5.0 + 10.0 * i / 50.0;
                pts.push_back({a, b, z, oracle::ml_series(a, b, z)});
            }
    const double t0 = now_ms();
    double worst = 0.0;
    for (const auto& p : pts) {
        const double err = std::abs(mittag_leffler(p.a, p.b, p.z) - p.want) /
                           std::max(1.0, std::abs(p.want));
        worst = std::max(worst, err);
    }
    double worst_exp = 0.0;
    for (double z = -30.0; z <= 30.0 + 1e-9; z += 0.5) {
        const double e = std::exp(z);
        worst_exp = std::max(worst_exp, std::abs(mittag_leffler(1.0, 1.0, z) - e) /
                                            std::max(1.0, std::abs(e)));
    }
    const double elapsed = now_ms() - t0;
    line(1, worst <= 1e-10, "mittag-leffler vs extended-precision series oracle", worst, 1e-10);
    line(1, worst_exp <= 1e-12, "E_{1,1} vs exp on [-30,30]", worst_exp, 1e-12);
    line(1, elapsed < 1000.0, "special-function sweep runtime (ms)", elapsed, 1000.0);
}

void criterion_7() {
    claim_line(7, "final-value-cf");
    // literal reading for the ML kernel: the limit is approached at the
    // algebraic rate phi(0) W / s^alpha, so 1e-3 at s = 1e4 cannot be met for
    // any alpha in (0,1) with B = 1; reported, not gated.
    const KernelSpec ab = make_ab_ml(0.5);
    const double gap = std::abs(final_value_check(ab) - kernel_value(ab, 0.0));
    line(7, gap <= 1e-3, "ML-kernel |s phi_hat - phi(0)| at s=1e4 (literal)", gap, 1e-3, false,
         /*expected_fail=*/true);
    claim_line(7, "final-value-abml"); // rate-derived bound, documented in the registry
    claim_line(7, "psi-hat-limit");
    claim_line(7, "jpsi-star-identity-cf");
    claim_line(7, "jpsi-star-identity-abml");
}

void criterion_10() {
    claim_line(10, "heat-caputo-separation");
    claim_line(10, "heat-forced-initial-data");
    claim_line(10, "heat-trivial-family");
    // within v0 = c sin(pi x), nonzero c keeps a residual proportional to c
    for (double c : {0.5, 1.0}) {
        HeatProblem p;
        p.x_nodes = 64;
        p.time = Grid(1.0, 1024);
        p.kernel = make_cf_exp(0.95);
        p.v0 = [c](double x) { return c * std::sin(M_PI * x); };
        p.forcing = [](double, double) { return 0.0; };
        p.g_left = [](double) { return 0.0; };
        p.g_right = [](double) { return 0.0; };
        HeatField f = solve_heat(p);
        line(10, f.per_level_residuals[0] >= 4.9 * c,
             "nonzero member c=" + std::to_string(c) + " keeps its residual",
             f.per_level_residuals[0], 4.9 * c, true);
    }
}

void criterion_14() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto first = run_all();
    const auto second = run_all();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(14, all_pass(first), "verify --all passes", all_pass(first) ? 1.0 : 0.0, 1.0, true);
    bool identical = first.size() == second.size();
    for (std::size_t i = 0; identical && i < first.size(); ++i)
        identical = first[i].value == second[i].value;
    line(14, identical, "two consecutive runs are bit-identical", identical ? 1.0 : 0.0, 1.0,
         true);
    line(14, secs < 60.0, "two full runs wall clock (s)", secs, 60.0);
}

} // namespace

int main() {
    criterion_1();

    claim_line(2, "caputo-fundamental-theorem");
    claim_line(2, "caputo-fundamental-theorem-order");

    claim_line(3, "cf-left-inverse-defect");
    claim_line(4, "abc-left-inverse-defect");
    claim_line(4, "cf-right-inverse");
    claim_line(4, "ab-right-inverse");

    claim_line(5, "zero-at-origin-cf");
    claim_line(5, "zero-at-origin-abml");
    claim_line(5, "zero-at-origin-halving-cf");
    claim_line(5, "zero-at-origin-halving-abml");
    claim_line(5, "caputo-origin-counterexample");
    claim_line(5, "abc-power-closed-form");

    claim_line(6, "sonine-power-pair");
    claim_line(6, "sonine-bounded-defect");
    claim_line(6, "sonine-bounded-decay-exponent");

    criterion_7();

    claim_line(8, "fde-defect-cf");
    claim_line(8, "fde-defect-cf-compatible");
    claim_line(8, "fde-defect-abc");
    claim_line(8, "fde-defect-persistence");

    claim_line(9, "cf-reduction-integer-order");
    claim_line(9, "abc-reduction-caputo");

    criterion_10();

    claim_line(11, "gl-caputo-agreement");
    claim_line(11, "gl-caputo-order");
    claim_line(11, "gl-rl-agreement");
    claim_line(11, "gl-rl-order");

    claim_line(12, "byparts-agree-cf");
    claim_line(12, "byparts-agree-abc");
    claim_line(12, "byparts-terms-cf");
    claim_line(12, "byparts-terms-abc");

    claim_line(13, "prabhakar-degeneration");
    claim_line(13, "prabhakar-sonine-pair");

    criterion_14();

    std::printf("%s: %d unexpected failure%s\n", g_failures == 0 ? "OK" : "NOT OK", g_failures,
                g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
