#pragma once

#include <string>
#include <vector>

#include "duploss/permutation.hpp"

namespace duploss {

/// Span between where value i sits and where it belongs (position i).
/// Elements are identified by value.
struct VpVector {
  int value = 0;
  int from_position = 0;  // position of `value` in sigma
  int to_position = 0;    // == value
  std::vector<int> covered;  // values at the spanned positions, in position order; empty for a fixpoint

  bool empty() const noexcept { return covered.empty(); }
  int size() const noexcept { return static_cast<int>(covered.size()); }
  bool points_left() const noexcept { return to_position < from_position; }
};

struct FreeWindowDecomposition {
  std::vector<IndexRange> vp_windows;
  std::vector<IndexRange> free_windows;
};

VpVector vp_vector(const Permutation& sigma, int value);
std::vector<VpVector> vp_vectors(const Permutation& sigma);

/// Values covered by at least one vp-vector, ascending.
std::vector<int> vp_domain(const Permutation& sigma);

/// Number of vp-vectors covering each value; index 0 unused.
std::vector<int> vp_coverage(const Permutation& sigma);

/// Every vp-domain element lies in at least two vp-vectors.
bool balance_condition_holds(const Permutation& sigma);

FreeWindowDecomposition free_window_decomposition(const Permutation& sigma);

/// sigma_{i-1} = i or sigma_{i+1} = i.
bool is_quasi_diagonal(const Permutation& sigma, int value);

/// Removing any single element changes each surviving non-fixpoint's
/// vp-vector size by at most one, unless it becomes a fixpoint.
bool check_removal_lemma(const Permutation& sigma);

/// First removal position creating at most one new fixpoint. Throws
/// NoWitness if there is none.
int check_one_fixpoint_lemma(const Permutation& sigma);

/// One line per value: "i: from -> to left|right {covered}" or "i: fixpoint".
std::string dump_vp_vectors(const Permutation& sigma);

}  // namespace duploss
