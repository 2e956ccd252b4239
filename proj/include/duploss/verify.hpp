#pragma once

#include <string>
#include <vector>

namespace duploss {

enum class VerifySuite { Lemmas, Closure, Basis, WholeGenome };

VerifySuite parse_suite(const std::string& name);

struct VerifyReport {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Exhaustive property checks over S_n for n <= max_size.
///   lemmas       vp removal / one-fixpoint lemmas and the balance condition
///   closure      members of C(2,1), C(3,1), C(2,2) stay members after any deletion
///   basis        C(K,1) equals the avoiders of the one-step basis, K = 2..4
///   whole-genome BFS distance with K = n equals ceil(log2(desc+1)); radix replays
VerifyReport run_verify(VerifySuite suite, int max_size);

}  // namespace duploss
