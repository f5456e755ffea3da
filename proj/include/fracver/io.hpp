#pragma once

#include "fracver/claims.hpp"
#include "fracver/diagnostics.hpp"
#include "fracver/fde.hpp"
#include "fracver/heat1d.hpp"

#include <json.hpp>

#include <string>

namespace fracver {

// CSV with header `t,value[,deriv]`, 17 significant digits (byte-stable).
void write_sampled_csv(const std::string& path, const SampledFunction& sf);
SampledFunction read_sampled_csv(const std::string& path);

// One row per time level: t followed by the field values (boundaries included).
void write_heat_csv(const std::string& path, const HeatField& field);

nlohmann::json to_json(const SonineReport& rep);
nlohmann::json to_json(const ClaimReport& rep);
nlohmann::json to_json(const std::vector<ClaimReport>& reps);
nlohmann::json to_json(const ResidualReport& rep);
nlohmann::json heat_summary_json(const HeatField& field);

} // namespace fracver
