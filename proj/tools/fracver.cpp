#include "fracver/errors.hpp"
#include "fracver/glcalc.hpp"
#include "fracver/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace fv = fracver;

namespace {

int default_grid_n() {
    const char* env = std::getenv("FRACVER_PRECISION");
    if (!env) return 2048;
    const std::string p(env);
    if (p == "fast") return 512;
    if (p == "thorough") return 8192;
    return 2048;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

fv::KernelSpec parse_kernel(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i, double fallback) {
        return parts.size() > i ? std::stod(parts[i]) : fallback;
    };
    if (kind == "power") return fv::make_power_law(arg(1, 0.5));
    if (kind == "cfexp") return fv::make_cf_exp(arg(1, 0.5), arg(2, 1.0));
    if (kind == "abml") return fv::make_ab_ml(arg(1, 0.5), arg(2, 1.0));
    if (kind == "prabhakar") {
        if (parts.size() < 5)
            throw fv::DomainError("kernel: prabhakar needs alpha:beta:gamma:lambda");
        return fv::make_prabhakar_kernel(arg(1, 0), arg(2, 0), arg(3, 0), arg(4, 0));
    }
    if (kind == "csv") {
        if (parts.size() < 2) throw fv::DomainError("kernel: csv needs a path");
        return fv::make_tabulated(fv::read_sampled_csv(parts[1]));
    }
    throw fv::DomainError("kernel: unknown kind '" + kind + "'");
}

fv::FunctionInput parse_function(const std::string& spec) {
    if (spec.rfind("csv:", 0) == 0)
        return fv::FunctionInput::sampled(fv::read_sampled_csv(spec.substr(4)));
    return fv::named_function(spec);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& p : split(s, ',')) out.push_back(std::stod(p));
    return out;
}

void emit(const std::string& out_path, const nlohmann::json& j) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracver: fractional-order operators with singular and bounded kernels, "
                 "and a verification registry for their identities and defects"};
    app.require_subcommand(1);

    // ---- apply ----
    auto* apply = app.add_subcommand("apply", "apply an operator to a test function");
    std::string op = "caputo", fname = "cos", kernel_spec, out_csv = "out.csv", method = "quad";
    double alpha = 0.5, beta = 0.5, gamma_p = 0.0, lambda = 0.0, M = 1.0, B = 1.0, T = 1.0;
    int N = 0;
    apply->add_option("--op", op,
                      "rl-integral|rl-derivative|caputo|cf|abc|cf-integral|ab-integral|dphi|"
                      "prabhakar-integral|prabhakar-derivative|cf-byparts|abc-byparts");
    apply->add_option("--f", fname, "const|linear|power:<g>|cos|sin|exp|csv:<path>");
    apply->add_option("--alpha", alpha);
    apply->add_option("--beta", beta, "prabhakar order");
    apply->add_option("--gamma", gamma_p, "prabhakar upper parameter");
    apply->add_option("--lambda", lambda, "prabhakar rate");
    apply->add_option("--M", M, "CF normalization");
    apply->add_option("--B", B, "ABC normalization");
    apply->add_option("--kernel", kernel_spec, "kernel for --op dphi, e.g. cfexp:0.5:1");
    apply->add_option("--method", method, "quad (default) or gl (Grunwald-Letnikov)");
    apply->add_option("--T", T);
    apply->add_option("--N", N, "grid cells (default from FRACVER_PRECISION)");
    apply->add_option("--out", out_csv);

    // ---- ml ----
    auto* ml = app.add_subcommand("ml", "evaluate Mittag-Leffler functions");
    std::string zlist = "1";
    double ml_alpha = 0.5, ml_beta = 1.0, ml_gamma = 1.0;
    std::string ml_out;
    ml->add_option("--alpha", ml_alpha)->required();
    ml->add_option("--beta", ml_beta);
    ml->add_option("--gamma", ml_gamma, "upper parameter; 1 gives the two-parameter function");
    ml->add_option("--z", zlist, "comma-separated arguments")->required();
    ml->add_option("--out", ml_out);

    // ---- sonine ----
    auto* sonine = app.add_subcommand("sonine", "check a kernel pair against the Sonine equation");
    std::string phi_spec = "power:0.5", psi_spec = "power:0.5", gaps_list = "1,0.1,0.01,0.001";
    int subcells = 1024;
    std::string sonine_out;
    sonine->add_option("--phi", phi_spec)->required();
    sonine->add_option("--psi", psi_spec)->required();
    sonine->add_option("--gaps", gaps_list);
    sonine->add_option("--subcells", subcells);
    sonine->add_option("--out", sonine_out);

    // ---- laplace ----
    auto* laplace = app.add_subcommand("laplace", "Laplace-domain probe of a kernel");
    std::string lap_kernel = "cfexp:0.5:1", s_list = "100,1000,10000", lap_out;
    double lap_T = 1.0;
    bool final_value = false;
    laplace->add_option("--kernel", lap_kernel)->required();
    laplace->add_option("--s", s_list);
    laplace->add_option("--T", lap_T, "zero-extension horizon");
    laplace->add_flag("--final-value", final_value, "report s phi_hat(s) at s=1e4 vs phi(0)");
    laplace->add_option("--out", lap_out);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "solve D y = g(t, y), y(0) = y0");
    std::string solve_op = "caputo", gname = "one", solve_out = "solution.csv";
    std::string solve_method = "direct";
    double y0 = 0.0;
    bool want_residual = false;
    solve->add_option("--op", solve_op, "caputo|cf|abc");
    solve->add_option("--method", solve_method,
                      "direct (Caputo) / pseudo (CF, ABC) / reduce (CF, ABC with g(0,y0)=0)");
    solve->add_option("--g", gname, "one|t|lambda-y:<l>|sin-t-y");
    solve->add_option("--y0", y0);
    solve->add_option("--alpha", alpha);
    solve->add_option("--M", M);
    solve->add_option("--B", B);
    solve->add_option("--T", T);
    solve->add_option("--N", N);
    solve->add_option("--out", solve_out);
    solve->add_flag("--residual", want_residual, "also emit the residual report JSON");

    // ---- heat ----
    auto* heat = app.add_subcommand("heat", "1-D diffusion with a fractional temporal kernel");
    std::string heat_kernel = "power:0.5", v0_spec = "sinpi", forcing_spec = "zero",
                heat_out = "heat";
    int x_nodes = 64;
    heat->add_option("--kernel", heat_kernel, "power:<mu> (Caputo, mu=1-alpha), cfexp, abml");
    heat->add_option("--v0", v0_spec, "sinpi[:c]|zero");
    heat->add_option("--forcing", forcing_spec, "zero|sinpi:<c>");
    heat->add_option("--xnodes", x_nodes);
    heat->add_option("--T", T);
    heat->add_option("--N", N);
    heat->add_option("--out", heat_out, "prefix for <out>.csv and <out>.json");

    // ---- verify / list-claims ----
    auto* verify = app.add_subcommand("verify", "run the verification registry");
    bool verify_all = false;
    std::string claim_id, group, verify_format = "text", verify_out;
    verify->add_flag("--all", verify_all);
    verify->add_option("--claim", claim_id, "run one claim by id");
    verify->add_option("--group", group, "run one group");
    verify->add_option("--format", verify_format, "text|json");
    verify->add_option("--out", verify_out);

    auto* list = app.add_subcommand("list-claims", "list registered claims");
    (void)list;

    CLI11_PARSE(app, argc, argv);
    if (N <= 0) N = default_grid_n();

    try {
        if (apply->parsed()) {
            fv::Grid grid(T, N);
            fv::FunctionInput f = parse_function(fname);
            fv::SampledFunction result;
            if (method == "gl") {
                if (op == "caputo")
                    result = fv::gl_derivative(alpha, f, grid, fv::ExtensionKind::TaylorExtension);
                else if (op == "rl-derivative")
                    result = fv::gl_derivative(alpha, f, grid, fv::ExtensionKind::ZeroExtension);
                else
                    throw fv::DomainError("apply: --method gl supports caputo and rl-derivative");
            } else if (op == "rl-integral") {
                result = fv::rl_integral(alpha, f, grid);
            } else if (op == "rl-derivative") {
                result = fv::rl_derivative(alpha, f, grid);
            } else if (op == "caputo") {
                result = fv::caputo_derivative(alpha, f, grid);
            } else if (op == "cf") {
                result = fv::cf_derivative(alpha, f, grid, M);
            } else if (op == "abc") {
                result = fv::abc_derivative(alpha, f, grid, B);
            } else if (op == "cf-integral") {
                result = fv::cf_integral(alpha, f, grid, M);
            } else if (op == "ab-integral") {
                result = fv::ab_integral(alpha, f, grid, B);
            } else if (op == "dphi") {
                if (kernel_spec.empty()) throw fv::DomainError("apply: --op dphi needs --kernel");
                result = fv::generic_dphi(parse_kernel(kernel_spec), f, grid);
            } else if (op == "prabhakar-integral") {
                result = fv::prabhakar_integral(alpha, beta, gamma_p, lambda, f, grid);
            } else if (op == "prabhakar-derivative") {
                result = fv::prabhakar_derivative(alpha, beta, gamma_p, lambda, f, grid);
            } else if (op == "cf-byparts") {
                result = fv::cf_derivative_byparts(alpha, f, grid, M);
            } else if (op == "abc-byparts") {
                result = fv::abc_derivative_byparts(alpha, f, grid, B);
            } else {
                throw fv::DomainError("apply: unknown --op '" + op + "'");
            }
            fv::write_sampled_csv(out_csv, result);
            std::cout << "apply " << op << " alpha=" << alpha << " f=" << fname << " N=" << N
                      << " -> " << out_csv << " (value at T: " << result.values[grid.N] << ")\n";
        } else if (ml->parsed()) {
            std::string lines = "z,value\n";
            for (double z : parse_list(zlist)) {
                const double v = ml_gamma == 1.0
                                     ? fv::mittag_leffler(ml_alpha, ml_beta, z)
                                     : fv::prabhakar_ml(ml_alpha, ml_beta, ml_gamma, z);
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z, v);
                lines += buf;
            }
            if (ml_out.empty()) {
                std::cout << lines;
            } else {
                std::ofstream f(ml_out);
                f << lines;
                std::cout << "ml -> " << ml_out << "\n";
            }
        } else if (sonine->parsed()) {
            fv::SonineReport rep = fv::sonine_check(parse_kernel(phi_spec), parse_kernel(psi_spec),
                                                    parse_list(gaps_list), subcells);
            emit(sonine_out, fv::to_json(rep));
            std::cout << "sonine: "
                      << (rep.classification == fv::SonineClass::SoninePair ? "SoninePair"
                                                                            : "DefectiveAtZero")
                      << " (decay exponent " << rep.decay_exponent << ")\n";
        } else if (laplace->parsed()) {
            const fv::KernelSpec k = parse_kernel(lap_kernel);
            if (final_value) {
                const double v = fv::final_value_check(k);
                nlohmann::json j = {{"s", 1e4},
                                    {"s_phi_hat", v},
                                    {"phi0", fv::kernel_value(k, 0.0)},
                                    {"gap", std::abs(v - fv::kernel_value(k, 0.0))}};
                emit(lap_out, j);
                std::cout << "final value: s phi_hat = " << v << ", phi(0) = "
                          << fv::kernel_value(k, 0.0) << "\n";
            } else {
                fv::LaplaceProbe p = fv::laplace_probe(k, parse_list(s_list), lap_T);
                nlohmann::json j = {{"s", p.s_values}, {"phi_hat", p.phi_hat},
                                    {"psi_hat", p.psi_hat}};
                emit(lap_out, j);
                std::cout << "laplace probe at " << p.s_values.size() << " abscissae\n";
            }
        } else if (solve->parsed()) {
            fv::FdeProblem p;
            p.alpha = alpha;
            p.M = M;
            p.B = B;
            p.y0 = y0;
            p.grid = fv::Grid(T, N);
            if (solve_op == "caputo") p.kind = fv::OperatorKind::CaputoDerivative;
            else if (solve_op == "cf") p.kind = fv::OperatorKind::CfDerivative;
            else if (solve_op == "abc") p.kind = fv::OperatorKind::AbcDerivative;
            else throw fv::DomainError("solve: unknown --op '" + solve_op + "'");
            if (gname == "one") {
                p.g = [](double, double) { return 1.0; };
                p.g_t = [](double, double) { return 0.0; };
                p.g_y = [](double, double) { return 0.0; };
            } else if (gname == "t") {
                p.g = [](double t, double) { return t; };
                p.g_t = [](double, double) { return 1.0; };
                p.g_y = [](double, double) { return 0.0; };
            } else if (gname == "sin-t-y") {
                p.g = [](double t, double y) { return std::sin(t) * y; };
                p.g_t = [](double t, double y) { return std::cos(t) * y; };
                p.g_y = [](double t, double) { return std::sin(t); };
            } else if (gname.rfind("lambda-y:", 0) == 0) {
                const double lam = std::stod(gname.substr(9));
                p.g = [lam](double, double y) { return lam * y; };
                p.g_t = [](double, double) { return 0.0; };
                p.g_y = [lam](double, double) { return lam; };
            } else {
                throw fv::DomainError("solve: unknown --g '" + gname + "'");
            }
            fv::SampledFunction y;
            if (p.kind == fv::OperatorKind::CaputoDerivative) y = fv::solve_caputo(p);
            else if (solve_method == "reduce")
                y = p.kind == fv::OperatorKind::CfDerivative ? fv::reduce_cf_to_integer(p)
                                                             : fv::reduce_abc_to_caputo(p);
            else y = fv::solve_pseudo(p);
            fv::write_sampled_csv(solve_out, y);
            std::cout << "solve " << solve_op << " g=" << gname << " N=" << N << " -> "
                      << solve_out << " (y(T) = " << y.values[p.grid.N] << ")\n";
            if (want_residual) {
                fv::ResidualReport rep = fv::residual_check(p, y);
                emit(solve_out + ".residual.json", fv::to_json(rep));
                std::cout << "residual report -> " << solve_out << ".residual.json"
                          << " (max mismatch " << rep.max_mismatch << ")\n";
            }
        } else if (heat->parsed()) {
            fv::HeatProblem p;
            p.x_nodes = x_nodes;
            p.time = fv::Grid(T, N);
            p.kernel = parse_kernel(heat_kernel);
            if (v0_spec == "zero") p.v0 = [](double) { return 0.0; };
            else if (v0_spec.rfind("sinpi", 0) == 0) {
                const double c = v0_spec.size() > 6 ? std::stod(v0_spec.substr(6)) : 1.0;
                p.v0 = [c](double x) { return c * std::sin(M_PI * x); };
            } else throw fv::DomainError("heat: unknown --v0 '" + v0_spec + "'");
            if (forcing_spec == "zero") p.forcing = [](double, double) { return 0.0; };
            else if (forcing_spec.rfind("sinpi:", 0) == 0) {
                const double c = std::stod(forcing_spec.substr(6));
                p.forcing = [c](double x, double) { return c * std::sin(M_PI * x); };
            } else throw fv::DomainError("heat: unknown --forcing '" + forcing_spec + "'");
            p.g_left = [](double) { return 0.0; };
            p.g_right = [](double) { return 0.0; };
            fv::HeatField f = fv::solve_heat(p);
            fv::write_heat_csv(heat_out + ".csv", f);
            emit(heat_out + ".json", fv::heat_summary_json(f));
            std::cout << "heat kernel=" << heat_kernel << " " << x_nodes << "x" << N
                      << " -> " << heat_out << ".csv/.json (initial slice residual "
                      << f.initial_slice_residual << ", first-level residual "
                      << f.per_level_residuals[0] << ")\n";
        } else if (verify->parsed()) {
            if (!verify_all && claim_id.empty() && group.empty())
                throw fv::DomainError("verify: pass --all, --claim <id> or --group <name>");
            std::vector<fv::ClaimReport> reports;
            if (!claim_id.empty()) reports.push_back(fv::run_claim(claim_id));
            else reports = fv::run_all(group);
            if (reports.empty())
                throw fv::DomainError("verify: no claims in group '" + group + "'");
            if (verify_format == "json") {
                emit(verify_out, fv::to_json(reports));
            } else {
                for (const auto& r : reports) {
                    std::printf("[%s] %-34s value=%-12.5g %s %-10.5g (%ld ms)\n",
                                r.pass ? "PASS" : "FAIL", r.info.id.c_str(), r.value,
                                r.info.lower_bound ? ">=" : "<=", r.info.tolerance,
                                r.runtime_ms);
                }
            }
            int failed = 0;
            for (const auto& r : reports) failed += r.pass ? 0 : 1;
            std::cout << reports.size() - failed << "/" << reports.size() << " claims pass\n";
            return failed == 0 ? 0 : 2;
        } else if (list->parsed()) {
            for (const auto& c : fv::list_claims())
                std::printf("%-34s [%s] %s\n", c.id.c_str(), c.group.c_str(),
                            c.statement.c_str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
