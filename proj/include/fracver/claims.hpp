#pragma once

#include <string>
#include <vector>

namespace fracver {

// One registered verification: a named identity or defect statement, a scalar
// measurement, and the bound it must satisfy. Defect-type entries pass when
// value <= tolerance; persistence-type entries (lower_bound) pass when
// value >= tolerance and encode results that must *survive* refinement.
struct ClaimInfo {
    std::string id;
    std::string group;
    std::string statement; // the identity or bound being checked, in plain math
    std::string metric;    // what is measured, with all parameters pinned
    double tolerance = 0.0;
    bool lower_bound = false;
};

struct ClaimReport {
    ClaimInfo info;
    double value = 0.0;
    bool pass = false;
    long runtime_ms = 0;
};

std::vector<ClaimInfo> list_claims();

// Throws DomainError for unknown ids.
ClaimReport run_claim(const std::string& id);

// Runs every claim whose group matches the filter (all when empty); reports
// are ordered by id and their values are deterministic across runs.
std::vector<ClaimReport> run_all(const std::string& group_filter = "");

bool all_pass(const std::vector<ClaimReport>& reports);

} // namespace fracver
