#include "duploss/io.hpp"

#include "duploss/error.hpp"

namespace duploss {

using nlohmann::json;

json to_json(const DupLossStep& step) {
  return json{{"start", step.start}, {"width", step.width}, {"keep", step.keep}};
}

DupLossStep step_from_json(const json& j) {
  try {
    DupLossStep step{j.at("start").get<int>(), j.at("width").get<int>(), j.at("keep").get<std::vector<int>>()};
    validate_step(step, step.start + step.width - 1);
    return step;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("step JSON: ") + e.what());
  }
}

json to_json(const Scenario& scenario) {
  json steps = json::array();
  for (const auto& s : scenario.steps) steps.push_back(to_json(s));
  json width = scenario.width_limit.is_infinite() ? json("inf") : json(scenario.width_limit.value());
  return json{{"n", scenario.n}, {"width_limit", width}, {"steps", steps}, {"final", replay(scenario).to_string()}};
}

Scenario scenario_from_json(const json& j) {
  Scenario sc;
  try {
    sc.n = j.at("n").get<int>();
    const auto& width = j.at("width_limit");
    sc.width_limit = width.is_string() ? WidthLimit::parse(width.get<std::string>()) : WidthLimit(width.get<int>());
    for (const auto& s : j.at("steps")) sc.steps.push_back(step_from_json(s));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("scenario JSON: ") + e.what());
  }
  const Permutation result = replay(sc);
  if (j.contains("final") && Permutation::parse(j["final"].get<std::string>()) != result) {
    throw Error(ErrorKind::Parse, "scenario \"final\" does not match its replay " + result.to_string());
  }
  return sc;
}

json to_json(const PatternBasis& basis, WidthLimit k, int steps, int max_size) {
  json patterns = json::array();
  for (const auto& p : basis.patterns) patterns.push_back(p.to_string());
  json width = k.is_infinite() ? json("inf") : json(k.value());
  return json{{"K", width},
              {"p", steps},
              {"max_size", max_size},
              {"antichain", basis.antichain},
              {"provenance", std::string(to_string(basis.provenance))},
              {"patterns", patterns}};
}

}  // namespace duploss
