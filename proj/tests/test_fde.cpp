#include "fracver/fde.hpp"

#include "fracver/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracver;

namespace {

FdeProblem base_problem(OperatorKind kind, int N = 512) {
    FdeProblem p;
    p.kind = kind;
    p.alpha = 0.5;
    p.grid = Grid(1.0, N);
    p.g = [](double, double) { return 0.0; };
    p.y0 = 1.0;
    return p;
}

} // namespace

TEST_CASE("zero right-hand side keeps the state constant") {
    FdeProblem pc = base_problem(OperatorKind::CaputoDerivative);
    SampledFunction yc = solve_caputo(pc);
    for (int n = 0; n <= pc.grid.N; ++n) CHECK(yc.values[n] == 1.0);
    for (OperatorKind kind : {OperatorKind::CfDerivative, OperatorKind::AbcDerivative}) {
        FdeProblem p = base_problem(kind);
        SampledFunction y = solve_pseudo(p);
        for (int n = 0; n <= p.grid.N; ++n) CHECK(y.values[n] == 1.0);
    }
}

TEST_CASE("caputo solver closed forms") {
    FdeProblem p = base_problem(OperatorKind::CaputoDerivative);
    p.g = [](double, double) { return 1.0; };
    p.y0 = 0.25;
    SampledFunction y = solve_caputo(p);
    for (int n : {1, 100, 512})
        CHECK(y.values[n] ==
              doctest::Approx(0.25 + std::pow(p.grid.node(n), 0.5) / std::tgamma(1.5))
                  .epsilon(1e-12));
}

TEST_CASE("linear caputo equation matches the Mittag-Leffler solution") {
    FdeProblem p = base_problem(OperatorKind::CaputoDerivative, 2048);
    p.g = [](double, double y) { return -y; };
    p.y0 = 1.0;
    SampledFunction y = solve_caputo(p);
    double worst = 0.0;
    for (int n = 1; n <= p.grid.N; ++n) {
        const double exact = mittag_leffler(0.5, -std::sqrt(p.grid.node(n)));
        worst = std::max(worst, std::abs(y.values[n] - exact));
    }
    CHECK(worst <= 5e-3);
}

TEST_CASE("cf pseudo-solution of g = 1") {
    FdeProblem p = base_problem(OperatorKind::CfDerivative, 1024);
    p.g = [](double, double) { return 1.0; };
    p.y0 = 0.0;
    SampledFunction y = solve_pseudo(p);
    // y(t) = y0 + (1-a)/M + a/M t = 0.5 + 0.5 t; note y(0) != y0
    for (int n = 0; n <= p.grid.N; ++n)
        CHECK(y.values[n] ==
              doctest::Approx(0.5 + 0.5 * p.grid.node(n)).scale(1.0).epsilon(1e-12));
}

TEST_CASE("residual of the cf pseudo-solution matches the predicted defect") {
    FdeProblem p = base_problem(OperatorKind::CfDerivative, 1024);
    p.g = [](double, double) { return 1.0; };
    p.y0 = 0.0;
    SampledFunction y = solve_pseudo(p);
    ResidualReport rep = residual_check(p, y);
    const double W = w_alpha(0.5);
    for (int n : {1, 5, 100, 1023}) {
        const double t = p.grid.node(n);
        CHECK(rep.predicted_defect.values[n] ==
              doctest::Approx(-std::exp(-W * t)).epsilon(1e-12));
        CHECK(rep.residual.values[n] ==
              doctest::Approx(-std::exp(-W * t)).epsilon(1e-4));
    }
    CHECK(rep.max_mismatch <= 1e-4);
}

TEST_CASE("compatible right-hand side removes the defect") {
    FdeProblem p = base_problem(OperatorKind::CfDerivative, 1024);
    p.g = [](double t, double y) { return std::sin(t) * y; };
    p.y0 = 1.0;
    SampledFunction y = solve_pseudo(p);
    CHECK(y.values[0] == doctest::Approx(1.0)); // g(0, y0) = 0 keeps the start exact
    ResidualReport rep = residual_check(p, y);
    double worst = 0.0;
    for (int n = 1; n < p.grid.N; ++n) worst = std::max(worst, std::abs(rep.residual.values[n]));
    CHECK(worst <= 5e-3);
}

TEST_CASE("the defect survives refinement when g(0,y0) != 0") {
    for (int N : {256, 512}) {
        FdeProblem p = base_problem(OperatorKind::CfDerivative, N);
        p.g = [](double, double) { return 1.0; };
        p.y0 = 0.0;
        ResidualReport rep = residual_check(p, solve_pseudo(p));
        double first5 = 0.0;
        for (int n = 1; n <= 5; ++n)
            first5 = std::max(first5, std::abs(rep.residual.values[n]));
        CHECK(first5 >= 0.05);
    }
}

TEST_CASE("cf reduction to an integer-order equation") {
    FdeProblem p = base_problem(OperatorKind::CfDerivative, 1024);
    p.g = [](double t, double y) { return std::sin(t) * y; };
    p.g_t = [](double t, double y) { return std::cos(t) * y; };
    p.g_y = [](double t, double) { return std::sin(t); };
    p.y0 = 1.0;
    SampledFunction a = solve_pseudo(p);
    SampledFunction b = reduce_cf_to_integer(p);
    double worst = 0.0;
    for (int n = 0; n <= p.grid.N; ++n)
        worst = std::max(worst, std::abs(a.values[n] - b.values[n]));
    CHECK(worst <= 1e-4);
}

TEST_CASE("cf reduction closed form for g = t") {
    FdeProblem p = base_problem(OperatorKind::CfDerivative, 512);
    p.g = [](double t, double) { return t; };
    p.g_t = [](double, double) { return 1.0; };
    p.g_y = [](double, double) { return 0.0; };
    p.y0 = 2.0;
    SampledFunction y = reduce_cf_to_integer(p);
    for (int n : {1, 256, 512}) {
        const double t = p.grid.node(n);
        CHECK(y.values[n] == doctest::Approx(2.0 + 0.5 * t + 0.25 * t * t).epsilon(1e-10));
    }
}

TEST_CASE("abc reduction to a caputo equation") {
    FdeProblem p = base_problem(OperatorKind::AbcDerivative, 1024);
    p.g = [](double t, double y) { return std::sin(t) * y; };
    p.y0 = 1.0;
    SampledFunction a = solve_pseudo(p);
    SampledFunction b = reduce_abc_to_caputo(p);
    double worst = 0.0;
    for (int n = 0; n <= p.grid.N; ++n)
        worst = std::max(worst, std::abs(a.values[n] - b.values[n]));
    CHECK(worst <= 1e-3);
}

TEST_CASE("abc reduction closed form for g = t") {
    FdeProblem p = base_problem(OperatorKind::AbcDerivative, 1024);
    p.g = [](double t, double) { return t; };
    p.y0 = 0.5;
    SampledFunction y = reduce_abc_to_caputo(p);
    for (int n : {64, 512, 1024}) {
        const double t = p.grid.node(n);
        const double exact = 0.5 + 0.5 * t + 0.5 * std::pow(t, 1.5) / std::tgamma(2.5);
        CHECK(y.values[n] == doctest::Approx(exact).epsilon(1e-3));
    }
}

TEST_CASE("reduction preconditions") {
    FdeProblem p = base_problem(OperatorKind::CfDerivative, 64);
    p.g = [](double, double) { return 1.0; }; // g(0, y0) = 1 != 0
    p.g_t = [](double, double) { return 0.0; };
    p.g_y = [](double, double) { return 0.0; };
    p.y0 = 0.0;
    CHECK_THROWS_AS(reduce_cf_to_integer(p), DomainError);
    p.kind = OperatorKind::AbcDerivative;
    CHECK_THROWS_AS(reduce_abc_to_caputo(p), DomainError);

    // algebraic degeneracy: 1 - (1-a)/M g_y = 0 for g = 2y at alpha = 0.5
    FdeProblem q = base_problem(OperatorKind::CfDerivative, 64);
    q.g = [](double t, double y) { return 2.0 * y * t; }; // g(0,y0)=0 passes the gate
    q.g_t = [](double, double y) { return 2.0 * y; };
    q.g_y = [](double t, double) { return 2.0 * t; };
    q.y0 = 1.0;
    // at t = 1, g_y = 2 and the denominator crosses zero
    CHECK_THROWS_AS(reduce_cf_to_integer(q), DomainError);
}

TEST_CASE("problem validation") {
    FdeProblem p;
    p.alpha = 1.5;
    p.g = [](double, double) { return 0.0; };
    p.grid = Grid(1.0, 8);
    CHECK_THROWS_AS(p.validate(), DomainError);
    FdeProblem q = base_problem(OperatorKind::GenericDPhi, 8);
    CHECK_THROWS_AS(q.validate(), DomainError); // kernel missing
    FdeProblem r = base_problem(OperatorKind::CaputoDerivative, 8);
    CHECK_THROWS_AS(solve_pseudo(r), DomainError);
}
