// Command-line front-end for the duplication-loss toolkit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "duploss/classes.hpp"
#include "duploss/error.hpp"
#include "duploss/experiments.hpp"
#include "duploss/io.hpp"
#include "duploss/scenarios.hpp"
#include "duploss/verify.hpp"
#include "duploss/vp_analysis.hpp"

using namespace duploss;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad integer '" + token + "'");
    }
  }
  return out;
}

void print_scenario_text(const Scenario& sc) {
  std::cout << "n=" << sc.n << " K=" << sc.width_limit.to_string() << " steps=" << sc.step_count() << '\n';
  for (const auto& s : sc.steps) {
    std::cout << "start=" << s.start << " width=" << s.width << " keep=";
    for (std::size_t i = 0; i < s.keep.size(); ++i) std::cout << (i ? "," : "") << s.keep[i];
    std::cout << '\n';
  }
  std::cout << "final=" << replay(sc).to_string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tandem duplication - random loss toolkit"};
  app.require_subcommand(1);

  // step apply
  auto* step = app.add_subcommand("step", "Single duplication-loss steps");
  step->require_subcommand(1);
  auto* step_apply = step->add_subcommand("apply", "Apply one step to a permutation");
  std::string perm_text;
  int start = 1;
  int width = 1;
  std::string keep_text;
  std::string emit = "text";
  step_apply->add_option("--perm", perm_text, "Permutation, e.g. 1,2,3,4,5,6,7")->required();
  step_apply->add_option("--start", start, "1-based window start")->required();
  step_apply->add_option("--width", width, "Window width")->required();
  step_apply->add_option("--keep", keep_text, "Offsets kept in the first copy, e.g. 2,3");
  step_apply->add_option("--emit", emit, "text or json")->check(CLI::IsMember({"text", "json"}));

  // scenario
  auto* scenario = app.add_subcommand("scenario", "Build a scenario from identity to a permutation");
  std::string algo = "bucket";
  std::string width_text = "inf";
  scenario->add_option("--algo", algo, "radix or bucket")->check(CLI::IsMember({"radix", "bucket"}));
  scenario->add_option("--perm", perm_text, "Target permutation")->required();
  scenario->add_option("--width", width_text, "Width limit K (bucket)");
  scenario->add_option("--emit", emit, "text or json")->check(CLI::IsMember({"text", "json"}));

  // class
  auto* cls = app.add_subcommand("class", "Exact class C(K,p) queries");
  cls->require_subcommand(1);
  int steps = 1;
  int size = 1;
  int max_size = 5;
  bool theorem = false;
  auto* cls_enum = cls->add_subcommand("enumerate", "List C(K,p) inside S_n");
  auto* cls_basis = cls->add_subcommand("basis", "Minimal forbidden patterns up to a size");
  auto* cls_member = cls->add_subcommand("member", "Membership test");
  for (auto* sub : {cls_enum, cls_basis, cls_member}) {
    sub->add_option("--width", width_text, "Width limit K, or inf")->required();
    sub->add_option("--steps", steps, "Step budget p")->required();
  }
  cls_enum->add_option("--size", size, "n")->required();
  cls_basis->add_option("--max-size", max_size, "Largest pattern size searched");
  cls_basis->add_flag("--theorem", theorem, "Emit the closed-form one-step basis instead of brute force");
  cls_member->add_option("--perm", perm_text, "Permutation")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Breadth-first optimal step counts");
  oracle->require_subcommand(1);
  auto* min_steps = oracle->add_subcommand("min-steps", "Minimal number of steps of width <= K");
  min_steps->add_option("--perm", perm_text, "Permutation")->required();
  min_steps->add_option("--width", width_text, "Width limit K, or inf");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive property suites; exits 1 on failure");
  std::string suite = "lemmas";
  max_size = 5;
  verify->add_option("--suite", suite, "lemmas | closure | basis | whole-genome")
      ->check(CLI::IsMember({"lemmas", "closure", "basis", "whole-genome"}));
  verify->add_option("--max-size", max_size, "Largest n enumerated");

  // bench
  auto* bench = app.add_subcommand("bench", "Bucket scenario benchmark rows as CSV");
  std::string policy_text = "const:8";
  std::string sizes_text = "64,128,256";
  int samples = 10;
  std::uint64_t seed = 1;
  std::string csv_path;
  bool timing = false;
  bool serial = false;
  bench->add_option("--policy", policy_text, "const:C | full | n_over_log | sqrt");
  bench->add_option("--sizes", sizes_text, "Comma-separated sizes");
  bench->add_option("--samples", samples, "Random permutations per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--csv", csv_path, "Output file (stdout when omitted)");
  bench->add_flag("--timing", timing, "Fill wall_time_ms (output is then not reproducible)");
  bench->add_flag("--serial", serial, "Use the serial reference driver");

  // vp
  auto* vp = app.add_subcommand("vp", "vp-vector diagnostics");
  vp->require_subcommand(1);
  auto* vp_dump = vp->add_subcommand("dump", "One line per vp-vector");
  vp_dump->add_option("--perm", perm_text, "Permutation")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (step_apply->parsed()) {
      const auto pi = Permutation::parse(perm_text);
      DupLossStep s{start, width, parse_int_list(keep_text)};
      const auto result = apply_step(pi, s);
      if (emit == "json") {
        std::cout << nlohmann::json{{"step", to_json(s)}, {"input", pi.to_string()}, {"result", result.to_string()}}.dump()
                  << '\n';
      } else {
        std::cout << result << '\n';
      }
    } else if (scenario->parsed()) {
      const auto sigma = Permutation::parse(perm_text);
      const Scenario sc = algo == "radix" ? radix_scenario(sigma)
                                          : bucket_scenario(sigma, WidthLimit::parse(width_text).resolve(sigma.size()));
      if (emit == "json") {
        std::cout << to_json(sc).dump(2) << '\n';
      } else {
        print_scenario_text(sc);
      }
    } else if (cls_enum->parsed()) {
      for (const auto& p : enumerate_class(ClassSpec(WidthLimit::parse(width_text), steps), size)) {
        std::cout << p << '\n';
      }
    } else if (cls_basis->parsed()) {
      const auto k = WidthLimit::parse(width_text);
      if (theorem) {
        if (steps != 1) throw Error(ErrorKind::Parse, "--theorem only describes p = 1");
        std::cout << to_json(theorem_basis_one_step(k), k, 1, k.value() + 1).dump(2) << '\n';
      } else {
        std::cout << to_json(minimal_forbidden_basis(ClassSpec(k, steps), max_size), k, steps, max_size).dump(2)
                  << '\n';
      }
    } else if (cls_member->parsed()) {
      const bool member = is_member(Permutation::parse(perm_text), ClassSpec(WidthLimit::parse(width_text), steps));
      std::cout << (member ? "true" : "false") << '\n';
      return member ? 0 : 1;
    } else if (min_steps->parsed()) {
      std::cout << bfs_min_steps(Permutation::parse(perm_text), WidthLimit::parse(width_text)) << '\n';
    } else if (verify->parsed()) {
      const auto report = run_verify(parse_suite(suite), max_size);
      for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
      std::cout << report.suite << ": " << report.checks << " checks, " << report.failures.size() << " failures\n";
      return report.ok() ? 0 : 1;
    } else if (bench->parsed()) {
      BenchConfig config{WidthPolicy::parse(policy_text), parse_int_list(sizes_text), samples, seed, timing};
      const auto rows = serial ? run_benchmark_serial(config) : run_benchmark(config);
      if (csv_path.empty()) {
        write_csv(std::cout, rows);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open " + csv_path);
        write_csv(out, rows);
      }
    } else if (vp_dump->parsed()) {
      std::cout << dump_vp_vectors(Permutation::parse(perm_text));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
