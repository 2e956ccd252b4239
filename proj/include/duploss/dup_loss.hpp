#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "duploss/permutation.hpp"

namespace duploss {

/// One tandem duplication - random loss event.
///
/// The window [start, start+width-1] is duplicated in place; `keep` lists the
/// 1-based offsets whose first copy survives. Every other element of the
/// window survives in the second copy. The net effect splits the window into
/// two order-preserving subsequences: kept offsets first, the rest after.
struct DupLossStep {
  int start = 1;
  int width = 1;
  std::vector<int> keep;  // sorted, each in 1..width

  bool operator==(const DupLossStep&) const = default;
};

/// Checks the step against a permutation of size n; throws WindowOutOfRange.
void validate_step(const DupLossStep& step, int n);

Permutation apply_step(const Permutation& pi, const DupLossStep& step);

/// Applies the step to a raw one-line buffer in place. No bounds checks
/// beyond debug asserts; use validate_step first for untrusted input.
void apply_step_inplace(std::span<int> values, const DupLossStep& step);

/// Bitmask form used by enumeration: bit (o-1) set means offset o is kept
/// in the first copy. Requires width <= 63.
void apply_mask_inplace(std::span<int> values, int start, int width, std::uint64_t mask);

/// All permutations reachable in one step of width <= min(K, n), sorted and
/// deduplicated. Always contains pi itself.
std::vector<Permutation> successors(const Permutation& pi, int width_limit);

/// inversions(apply_step(pi, s)) - inversions(pi).
std::int64_t inversions_created(const Permutation& pi, const DupLossStep& step);

}  // namespace duploss
