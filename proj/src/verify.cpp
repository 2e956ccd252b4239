#include "duploss/verify.hpp"

#include <algorithm>
#include <numeric>

#include "duploss/classes.hpp"
#include "duploss/error.hpp"
#include "duploss/scenarios.hpp"
#include "duploss/vp_analysis.hpp"

namespace duploss {

VerifySuite parse_suite(const std::string& name) {
  if (name == "lemmas") return VerifySuite::Lemmas;
  if (name == "closure") return VerifySuite::Closure;
  if (name == "basis") return VerifySuite::Basis;
  if (name == "whole-genome") return VerifySuite::WholeGenome;
  throw Error(ErrorKind::Parse, "unknown suite '" + name + "' (lemmas, closure, basis, whole-genome)");
}

namespace {

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Permutation::unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void lemmas(VerifyReport& report, int max_size) {
  for (int n = 2; n <= max_size; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      report.checks += 3;
      if (!check_removal_lemma(sigma)) report.failures.push_back("removal lemma: " + sigma.to_string());
      try {
        check_one_fixpoint_lemma(sigma);
      } catch (const Error&) {
        report.failures.push_back("one-fixpoint lemma: " + sigma.to_string());
      }
      if (!balance_condition_holds(sigma)) report.failures.push_back("balance: " + sigma.to_string());
    });
  }
}

void closure(VerifyReport& report, int max_size) {
  for (const auto& spec : {ClassSpec(2, 1), ClassSpec(3, 1), ClassSpec(2, 2)}) {
    for (int n = 2; n <= max_size; ++n) {
      for (const auto& sigma : enumerate_class(spec, n)) {
        for (int pos = 1; pos <= n; ++pos) {
          ++report.checks;
          if (!is_member(remove_at(sigma, pos), spec)) {
            report.failures.push_back("closure K=" + spec.width.to_string() + " p=" + std::to_string(spec.steps) +
                                      ": " + sigma.to_string() + " minus position " + std::to_string(pos));
          }
        }
      }
    }
  }
}

void basis(VerifyReport& report, int max_size) {
  for (int k = 2; k <= 4; ++k) {
    const auto theorem = theorem_basis_one_step(WidthLimit(k));
    for (int n = 1; n <= max_size; ++n) {
      ++report.checks;
      if (enumerate_class(ClassSpec(k, 1), n) != avoiders(theorem.patterns, n)) {
        report.failures.push_back("duality K=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
}

void whole_genome(VerifyReport& report, int max_size) {
  for (int n = 1; n <= max_size; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      report.checks += 2;
      const int expected = ceil_log2(descent_count(sigma) + 1);
      if (bfs_min_steps(sigma, WidthLimit(n)) != expected) {
        report.failures.push_back("bfs distance: " + sigma.to_string());
      }
      const Scenario sc = radix_scenario(sigma);
      if (replay(sc) != sigma || static_cast<int>(sc.step_count()) != expected) {
        report.failures.push_back("radix: " + sigma.to_string());
      }
    });
  }
}

}  // namespace

VerifyReport run_verify(VerifySuite suite, int max_size) {
  VerifyReport report;
  switch (suite) {
    case VerifySuite::Lemmas: report.suite = "lemmas"; lemmas(report, max_size); break;
    case VerifySuite::Closure: report.suite = "closure"; closure(report, max_size); break;
    case VerifySuite::Basis: report.suite = "basis"; basis(report, max_size); break;
    case VerifySuite::WholeGenome: report.suite = "whole-genome"; whole_genome(report, max_size); break;
  }
  return report;
}

}  // namespace duploss
