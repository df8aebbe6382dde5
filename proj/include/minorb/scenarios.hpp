#pragma once

// Per-family claim suites. Each scenario builds its algebras and embeddings
// from scratch, runs the checks in a fixed order, and returns one ClaimRecord
// per claim; scenarios are independent and deterministic in the seed.

#include "minorb/report.hpp"

#include <cstdint>
#include <vector>

namespace minorb {

struct ScenarioOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    bool check_prescriptions = false;
};

std::vector<ClaimRecord> scenario_dn(int n, const ScenarioOptions& opt);
std::vector<ClaimRecord> scenario_e6(const ScenarioOptions& opt);
std::vector<ClaimRecord> scenario_e7(const ScenarioOptions& opt);

VerificationReport run_scenarios(const std::vector<int>& dn_range, bool with_e6, bool with_e7,
                                 const ScenarioOptions& opt);

} // namespace minorb
