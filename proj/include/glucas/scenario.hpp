#ifndef GLUCAS_SCENARIO_HPP
#define GLUCAS_SCENARIO_HPP

#include <string>
#include <vector>

#include "glucas/config.hpp"
#include "glucas/verifier.hpp"

namespace glucas {

struct RunResult {
    int exit_code = 3; // 0 pass, 1 fail, 2 uncertain, 3 config/runtime error
    VerificationReport report;
    std::vector<std::string> artifacts; // files written, relative to out dir
};

// Dispatches the scenario, writes report/CSV/plan/mask artifacts plus a
// MANIFEST into out_dir.
RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir);

std::string render_report(const VerificationReport& rep, const ScenarioConfig& cfg);

} // namespace glucas

#endif
