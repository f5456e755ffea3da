#include "fracver/io.hpp"

#include "fracver/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fracver {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_sampled_csv(const std::string& path, const SampledFunction& sf) {
    std::ofstream out(path);
    if (!out) throw DomainError("write_sampled_csv: cannot open " + path);
    const bool with_deriv = sf.deriv_values.has_value();
    out << (with_deriv ? "t,value,deriv\n" : "t,value\n");
    for (int j = 0; j <= sf.grid.N; ++j) {
        out << fmt(sf.grid.node(j)) << ',' << fmt(sf.values[j]);
        if (with_deriv) out << ',' << fmt((*sf.deriv_values)[j]);
        out << '\n';
    }
}

SampledFunction read_sampled_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("read_sampled_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("read_sampled_csv: empty file");
    const bool with_deriv = line.rfind("t,value,deriv", 0) == 0;
    if (!with_deriv && line.rfind("t,value", 0) != 0)
        throw DomainError("read_sampled_csv: unexpected header '" + line + "'");
    std::vector<double> t, v, d;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        double row[3] = {0, 0, 0};
        int c = 0;
        while (std::getline(ss, cell, ',') && c < 3) row[c++] = std::stod(cell);
        if (c < 2) throw DomainError("read_sampled_csv: short row '" + line + "'");
        t.push_back(row[0]);
        v.push_back(row[1]);
        if (with_deriv) d.push_back(row[2]);
    }
    if (t.size() < 2) throw DomainError("read_sampled_csv: need at least two rows");
    if (std::abs(t.front()) > 1e-12) throw DomainError("read_sampled_csv: grid must start at 0");
    const int N = static_cast<int>(t.size()) - 1;
    const double h = t[1] - t[0];
    for (int j = 1; j <= N; ++j)
        if (std::abs(t[j] - j * h) > 1e-9 * std::max(1.0, std::abs(t[j])))
            throw DomainError("read_sampled_csv: grid is not uniform");
    Grid g(t.back(), N);
    Eigen::VectorXd values = Eigen::Map<Eigen::VectorXd>(v.data(), N + 1);
    if (with_deriv) {
        Eigen::VectorXd derivs = Eigen::Map<Eigen::VectorXd>(d.data(), N + 1);
        return SampledFunction(g, std::move(values), std::move(derivs));
    }
    return SampledFunction(g, std::move(values));
}

void write_heat_csv(const std::string& path, const HeatField& field) {
    std::ofstream out(path);
    if (!out) throw DomainError("write_heat_csv: cannot open " + path);
    out << "t";
    const double dx = 1.0 / (field.x_nodes + 1);
    for (int i = 0; i <= field.x_nodes + 1; ++i) out << ",u(" << fmt(i * dx) << ")";
    out << '\n';
    for (int n = 0; n <= field.time.N; ++n) {
        out << fmt(field.time.node(n));
        for (int i = 0; i <= field.x_nodes + 1; ++i) out << ',' << fmt(field.u(n, i));
        out << '\n';
    }
}

nlohmann::json to_json(const SonineReport& rep) {
    return {
        {"gaps", rep.gaps},
        {"integrals", rep.integrals},
        {"classification",
         rep.classification == SonineClass::SoninePair ? "SoninePair" : "DefectiveAtZero"},
        {"decay_exponent", rep.decay_exponent},
    };
}

nlohmann::json to_json(const ClaimReport& rep) {
    return {
        {"id", rep.info.id},
        {"group", rep.info.group},
        {"statement", rep.info.statement},
        {"metric", rep.info.metric},
        {"value", rep.value},
        {"tolerance", rep.info.tolerance},
        {"direction", rep.info.lower_bound ? "at-least" : "at-most"},
        {"pass", rep.pass},
        {"runtime_ms", rep.runtime_ms},
    };
}

nlohmann::json to_json(const std::vector<ClaimReport>& reps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(to_json(r));
    return arr;
}

nlohmann::json to_json(const ResidualReport& rep) {
    std::vector<double> res(rep.residual.values.data(),
                            rep.residual.values.data() + rep.residual.values.size());
    std::vector<double> pred(rep.predicted_defect.values.data(),
                             rep.predicted_defect.values.data() + rep.predicted_defect.values.size());
    return {
        {"residual", res},
        {"predicted_defect", pred},
        {"max_mismatch", rep.max_mismatch},
    };
}

nlohmann::json heat_summary_json(const HeatField& field) {
    std::vector<double> lvl(field.per_level_residuals.data(),
                            field.per_level_residuals.data() + field.per_level_residuals.size());
    return {
        {"initial_slice_residual", field.initial_slice_residual},
        {"per_level_residuals", lvl},
        {"unsatisfiable", field.unsatisfiable_annotation},
    };
}

} // namespace fracver
