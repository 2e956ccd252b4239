#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "duploss/permutation.hpp"
#include "duploss/scenarios.hpp"

namespace duploss {

/// Parameters of C(K, p): permutations reachable from the identity in at
/// most p steps of width at most K. "At most" and "exactly" coincide because
/// width-1 steps are no-ops.
struct ClassSpec {
  WidthLimit width;
  int steps = 1;

  ClassSpec(WidthLimit k, int p);
  ClassSpec(int k, int p) : ClassSpec(WidthLimit(k), p) {}
};

enum class BasisProvenance { TheoremConstructed, BruteForce };
std::string_view to_string(BasisProvenance provenance);

struct PatternBasis {
  std::vector<Permutation> patterns;  // sorted by (size, one-line order)
  bool antichain = false;
  BasisProvenance provenance = BasisProvenance::BruteForce;
};

/// True iff no pattern in the set is contained in another one.
bool is_antichain(const std::vector<Permutation>& patterns);

/// One-descent permutations of S_{K+1} that neither start with 1 nor end
/// with K+1. Exactly 2^(K-1) of them.
std::vector<Permutation> d_set(WidthLimit k);

/// {321, 3142, 2143} united with d_set(K). Not an antichain for K = 2.
PatternBasis theorem_basis_one_step(WidthLimit k);

/// Largest n the exhaustive routines accept. Defaults to 10; the
/// DUPLOSS_MAX_N environment variable overrides it.
int enumeration_cap();

std::vector<Permutation> enumerate_class(const ClassSpec& spec, int n);
bool is_member(const Permutation& sigma, const ClassSpec& spec);

/// Every sigma with |sigma| <= max_size outside the class whose one-element
/// deletions all lie inside it.
PatternBasis minimal_forbidden_basis(const ClassSpec& spec, int max_size);

/// Minimal p with sigma in C(K, p).
int bfs_min_steps(const Permutation& sigma, WidthLimit k);

/// The members of S_n avoiding every pattern of `basis`, sorted.
std::vector<Permutation> avoiders(const std::vector<Permutation>& basis, int n);

/// Drops the memoized BFS tables.
void clear_reachability_cache();

}  // namespace duploss
