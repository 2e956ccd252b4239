#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "duploss/dup_loss.hpp"
#include "duploss/permutation.hpp"

namespace duploss {

/// Width limit K, possibly unbounded. Unbounded behaves as K = n.
class WidthLimit {
 public:
  static WidthLimit infinite() { return WidthLimit(); }
  explicit WidthLimit(int k) : k_(k) {}

  bool is_infinite() const noexcept { return !k_.has_value(); }
  /// Finite K; throws InfiniteK when unbounded.
  int value() const;
  /// Effective width cap on a permutation of size n.
  int resolve(int n) const noexcept { return k_ ? *k_ : n; }

  /// "inf" or the decimal value.
  std::string to_string() const;
  static WidthLimit parse(const std::string& text);

  bool operator==(const WidthLimit&) const = default;

 private:
  WidthLimit() = default;
  std::optional<int> k_;
};

/// Ordered steps that transform identity_n into some target.
struct Scenario {
  int n = 0;
  WidthLimit width_limit = WidthLimit::infinite();
  std::vector<DupLossStep> steps;

  std::size_t step_count() const noexcept { return steps.size(); }
};

/// A contiguous window whose current content is increasing, together with
/// the arrangement of those same values it should end up in.
struct SubWindowTarget {
  IndexRange positions;
  std::vector<int> current;
  std::vector<int> target;
};

/// Optimal whole-window radix scenario: ceil(log2(runs of target)) steps,
/// each spanning exactly `target.positions`. Throws NotSortedWindow when the
/// current content is not increasing or target is not a rearrangement of it.
Scenario radix_scenario(const SubWindowTarget& target, int n);

/// Convenience: whole-permutation radix scenario from identity to sigma.
Scenario radix_scenario(const Permutation& sigma);

/// Bounded-width bucket scenario from identity to sigma. Throws InvalidK for K < 2.
Scenario bucket_scenario(const Permutation& sigma, int width_limit);

/// bucket_scenario plus the state between its two phases.
struct BucketTrace {
  Scenario scenario;
  std::size_t phase1_steps = 0;
  /// Every window holds sigma's values for it, in increasing order.
  Permutation after_phase1;
};
BucketTrace bucket_trace(const Permutation& sigma, int width_limit);

/// Windows used by bucket_scenario, right to left: right-anchored blocks of
/// width floor(K/2), then the leftmost remainder (width <= K). For n <= K
/// there is a single window [1..n].
std::vector<IndexRange> bucket_windows(int n, int width_limit);

/// Convoy steps moving `members` (values of pi) into `target_range` without
/// changing their relative order or that of the other elements. All members
/// must lie at or left of target_range.last. Throws TooManyMembers when
/// |members| > floor(K/2).
std::vector<DupLossStep> phase1_move_block(const Permutation& pi, const std::set<int>& members,
                                           IndexRange target_range, int width_limit);

/// Folds the steps over identity_n. Throws WidthExceeded or WindowOutOfRange
/// on a corrupt scenario.
Permutation replay(const Scenario& scenario);

int ceil_log2(std::int64_t x);

}  // namespace duploss
