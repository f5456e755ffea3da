#include "fracver/heat1d.hpp"

#include "fracver/convquad.hpp"
#include "fracver/diagnostics.hpp"
#include "fracver/errors.hpp"

#include <cmath>

namespace fracver {

void HeatProblem::validate() const {
    if (x_nodes < 3) throw DomainError("HeatProblem: need at least 3 interior x nodes");
    if (!v0 || !forcing || !g_left || !g_right)
        throw DomainError("HeatProblem: v0, forcing and boundary data are required");
}

bool HeatProblem::compatible_boundary() const {
    return std::abs(v0(0.0) - g_left(0.0)) <= 1e-12 &&
           std::abs(v0(1.0) - g_right(0.0)) <= 1e-12;
}

namespace {

// Solve (I - a Lap_h) u = rhs for the interior values, Dirichlet values bl/br.
void thomas_solve(double a, double dx, const Eigen::VectorXd& rhs, double bl, double br,
                  Eigen::VectorXd& out) {
    const int X = static_cast<int>(rhs.size());
    const double off = -a / (dx * dx);
    const double diag = 1.0 + 2.0 * a / (dx * dx);
    Eigen::VectorXd c(X), d(X);
    Eigen::VectorXd b = rhs;
    b[0] -= off * bl;
    b[X - 1] -= off * br;
    c[0] = off / diag;
    d[0] = b[0] / diag;
    for (int i = 1; i < X; ++i) {
        const double m = diag - off * c[i - 1];
        c[i] = off / m;
        d[i] = (b[i] - off * d[i - 1]) / m;
    }
    out.resize(X);
    out[X - 1] = d[X - 1];
    for (int i = X - 2; i >= 0; --i) out[i] = d[i] - c[i] * out[i + 1];
}

Eigen::VectorXd laplacian(const Eigen::VectorXd& u, double dx, double bl, double br) {
    const int X = static_cast<int>(u.size());
    Eigen::VectorXd r(X);
    for (int i = 0; i < X; ++i) {
        const double left = i == 0 ? bl : u[i - 1];
        const double right = i == X - 1 ? br : u[i + 1];
        r[i] = (left - 2.0 * u[i] + right) / (dx * dx);
    }
    return r;
}

} // namespace

double initial_slice_residual(const HeatProblem& p) {
    p.validate();
    const int X = p.x_nodes;
    const double dx = p.dx();
    Eigen::VectorXd v(X);
    for (int i = 0; i < X; ++i) v[i] = p.v0((i + 1) * dx);
    const Eigen::VectorXd lap = laplacian(v, dx, p.v0(0.0), p.v0(1.0));
    double r = 0.0;
    for (int i = 0; i < X; ++i)
        r = std::max(r, std::abs(lap[i] + p.forcing((i + 1) * dx, 0.0)));
    return r;
}

HeatField solve_heat(const HeatProblem& p) {
    p.validate();
    const Grid& tg = p.time;
    const int X = p.x_nodes;
    const int N = tg.N;
    const double dx = p.dx();

    const bool caputo_case =
        std::holds_alternative<PowerLaw>(p.kernel) && std::get<PowerLaw>(p.kernel).mu < 1.0;
    if (!caputo_case && !(std::holds_alternative<CfExp>(p.kernel) ||
                          std::holds_alternative<AbMl>(p.kernel)))
        throw DomainError("solve_heat: kernel must be PowerLaw{mu<1} (Caputo) or CfExp/AbMl");

    Eigen::VectorXd v0(X), fx(X);
    for (int i = 0; i < X; ++i) v0[i] = p.v0((i + 1) * dx);

    HeatField field;
    field.time = tg;
    field.x_nodes = X;
    field.u.resize(N + 1, X + 2);
    field.initial_slice_residual = initial_slice_residual(p);

    Eigen::MatrixXd G(N + 1, X); // Lap u + f at each level
    auto forcing_at = [&](int n, Eigen::VectorXd& out) {
        const double t = tg.node(n);
        for (int i = 0; i < X; ++i) out[i] = p.forcing((i + 1) * dx, t);
    };
    auto store_level = [&](int n, const Eigen::VectorXd& u) {
        field.u(n, 0) = p.g_left(tg.node(n));
        field.u(n, X + 1) = p.g_right(tg.node(n));
        field.u.row(n).segment(1, X) = u.transpose();
    };

    Eigen::VectorXd u = v0, rhs(X), lap(X);

    if (caputo_case) {
        const double alpha = 1.0 - std::get<PowerLaw>(p.kernel).mu;
        auto w = pi_rectangle_weights(make_power_law(alpha), tg);
        store_level(0, v0);
        forcing_at(0, fx);
        G.row(0) = (laplacian(v0, dx, field.u(0, 0), field.u(0, X + 1)) + fx).transpose();
        for (int n = 1; n <= N; ++n) {
            forcing_at(n, fx);
            rhs = v0;
            for (int j = 1; j < n; ++j) rhs += w->cell[n - j] * G.row(j).transpose();
            rhs += w->cell[0] * fx;
            thomas_solve(w->cell[0], dx, rhs, p.g_left(tg.node(n)), p.g_right(tg.node(n)), u);
            store_level(n, u);
            G.row(n) = (laplacian(u, dx, field.u(n, 0), field.u(n, X + 1)) + fx).transpose();
        }
    } else {
        const JpsiStar j = construct_jpsi_star(p.kernel);
        auto w = pi_rectangle_weights(j.psi_star, tg);
        field.unsatisfiable_annotation = field.initial_slice_residual > 1e-8;
        // level 0: the pseudo value u = v0 + (1/phi(0)) G
        forcing_at(0, fx);
        rhs = v0 + j.inverse_phi0 * fx;
        thomas_solve(j.inverse_phi0, dx, rhs, p.g_left(0.0), p.g_right(0.0), u);
        store_level(0, u);
        G.row(0) = (laplacian(u, dx, field.u(0, 0), field.u(0, X + 1)) + fx).transpose();
        for (int n = 1; n <= N; ++n) {
            forcing_at(n, fx);
            const double a_impl = j.inverse_phi0 + j.kernel_scale * 0.5 * w->cell[0];
            rhs = v0 + a_impl * fx;
            for (int jdx = 0; jdx < n - 1; ++jdx)
                rhs += j.kernel_scale * w->cell[n - 1 - jdx] * 0.5 *
                       (G.row(jdx) + G.row(jdx + 1)).transpose();
            rhs += j.kernel_scale * 0.5 * w->cell[0] * G.row(n - 1).transpose();
            thomas_solve(a_impl, dx, rhs, p.g_left(tg.node(n)), p.g_right(tg.node(n)), u);
            store_level(n, u);
            G.row(n) = (laplacian(u, dx, field.u(n, 0), field.u(n, X + 1)) + fx).transpose();
        }
    }

    // PDE residual per level: D_phi u evaluated from the stored field by
    // per-cell differences against the exact kernel cell integrals.
    auto wk = pi_rectangle_weights(p.kernel, tg);
    Eigen::MatrixXd dif(N, X);
    for (int n = 0; n < N; ++n)
        dif.row(n) = (field.u.row(n + 1).segment(1, X) - field.u.row(n).segment(1, X)) / tg.h;
    field.per_level_residuals.resize(N);
    Eigen::VectorXd conv(X);
    for (int n = 1; n <= N; ++n) {
        conv.setZero();
        for (int jdx = 0; jdx < n; ++jdx) conv += wk->cell[n - 1 - jdx] * dif.row(jdx).transpose();
        forcing_at(n, fx);
        const Eigen::VectorXd lap_n =
            laplacian(field.u.row(n).segment(1, X).transpose(), dx, field.u(n, 0), field.u(n, X + 1));
        field.per_level_residuals[n - 1] = (conv - lap_n - fx).cwiseAbs().maxCoeff();
    }
    return field;
}

} // namespace fracver
