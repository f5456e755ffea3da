#include "fracver/heat1d.hpp"

#include "fracver/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracver;

namespace {

HeatProblem base(int X, int N, double T = 1.0) {
    HeatProblem p;
    p.x_nodes = X;
    p.time = Grid(T, N);
    p.v0 = [](double x) { return std::sin(M_PI * x); };
    p.forcing = [](double, double) { return 0.0; };
    p.g_left = [](double) { return 0.0; };
    p.g_right = [](double) { return 0.0; };
    return p;
}

} // namespace

TEST_CASE("initial slice residual examples") {
    HeatProblem p = base(64, 8);
    // -v0'' = pi^2 sin(pi x), peak near x = 1/2
    CHECK(initial_slice_residual(p) == doctest::Approx(M_PI * M_PI).epsilon(2e-3));

    // affine initial data with matching boundary values: residual ~ 0
    HeatProblem lin = base(64, 8);
    lin.v0 = [](double x) { return x; };
    lin.g_right = [](double) { return 1.0; };
    CHECK(initial_slice_residual(lin) <= 1e-9);
    CHECK(lin.compatible_boundary());

    // compatible pair: forcing chosen to cancel the slice residual
    HeatProblem comp = base(64, 8);
    comp.forcing = [](double x, double) { return M_PI * M_PI * std::sin(M_PI * x); };
    CHECK(initial_slice_residual(comp) <= 1e-2);
}

TEST_CASE("zero data give the zero field") {
    HeatProblem p = base(16, 32);
    p.v0 = [](double) { return 0.0; };
    for (const KernelSpec& k : {make_power_law(0.5), make_cf_exp(0.5)}) {
        p.kernel = k;
        HeatField f = solve_heat(p);
        CHECK(f.u.cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(f.per_level_residuals.cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("caputo diffusion matches the separation-of-variables solution") {
    HeatProblem p = base(32, 256);
    p.kernel = make_power_law(0.5); // alpha = 0.5
    HeatField f = solve_heat(p);
    const double dx = p.dx();
    double worst = 0.0;
    for (int n = 1; n <= p.time.N; ++n) {
        const double e = mittag_leffler(0.5, -M_PI * M_PI * std::sqrt(p.time.node(n)));
        for (int i = 1; i <= p.x_nodes; ++i)
            worst = std::max(worst, std::abs(f.u(n, i) - std::sin(M_PI * i * dx) * e));
    }
    CHECK(worst <= 0.1); // coarse grid; the registry runs the 64 x 1024 case
    CHECK_FALSE(f.unsatisfiable_annotation);
    // the Caputo run satisfies its own discretization: small PDE residuals
    CHECK(f.per_level_residuals[0] <= 2.0);
}

TEST_CASE("bounded kernel keeps a first-level residual of the slice size") {
    for (int N : {128, 512}) {
        HeatProblem p = base(32, N);
        p.kernel = make_cf_exp(0.95);
        HeatField f = solve_heat(p);
        CHECK(f.unsatisfiable_annotation);
        CHECK(f.per_level_residuals[0] >= 0.5 * f.initial_slice_residual);
        // the residual trajectory follows the kernel shape e^{-W t} G(0)
        const double W = w_alpha(0.95);
        const double r1 = f.per_level_residuals[0];
        const int mid = N / 2;
        const double expected_mid = r1 * std::exp(-W * (p.time.node(mid) - p.time.node(1)));
        CHECK(f.per_level_residuals[mid - 1] == doctest::Approx(expected_mid).epsilon(0.05));
    }
}

TEST_CASE("bounded-kernel field is scale-linear in the initial amplitude") {
    HeatProblem p1 = base(16, 64);
    p1.kernel = make_cf_exp(0.95);
    HeatProblem phalf = base(16, 64);
    phalf.kernel = make_cf_exp(0.95);
    phalf.v0 = [](double x) { return 0.5 * std::sin(M_PI * x); };
    HeatField f1 = solve_heat(p1);
    HeatField fh = solve_heat(phalf);
    CHECK(fh.per_level_residuals[0] ==
          doctest::Approx(0.5 * f1.per_level_residuals[0]).epsilon(1e-10));
}

TEST_CASE("validation") {
    HeatProblem p = base(2, 8);
    CHECK_THROWS_AS(p.validate(), DomainError);
    HeatProblem q = base(8, 8);
    q.kernel = make_power_law(1.5); // neither Caputo-type nor supported bounded kind
    CHECK_THROWS_AS(solve_heat(q), DomainError);
}
