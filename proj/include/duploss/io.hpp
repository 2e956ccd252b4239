#pragma once

#include <json.hpp>

#include "duploss/classes.hpp"
#include "duploss/dup_loss.hpp"
#include "duploss/scenarios.hpp"

namespace duploss {

/// {"start": s, "width": k, "keep": [sorted offsets]}
nlohmann::json to_json(const DupLossStep& step);
DupLossStep step_from_json(const nlohmann::json& j);

/// {"n": n, "width_limit": K | "inf", "steps": [...], "final": "one,line"}
nlohmann::json to_json(const Scenario& scenario);
/// Reads a scenario and checks that "final", when present, matches its replay.
Scenario scenario_from_json(const nlohmann::json& j);

/// {"K", "p", "max_size", "antichain", "provenance", "patterns": ["3,2,1", ...]}
nlohmann::json to_json(const PatternBasis& basis, WidthLimit k, int steps, int max_size);

}  // namespace duploss
