#pragma once

// Data-parallel kernels behind class enumeration. Each kernel has a serial
// reference and an OpenMP version; both must return identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "duploss/permutation.hpp"

namespace duploss::kernels {

/// Distance label for states not yet reached.
inline constexpr std::int8_t kUnreached = -1;

/// One BFS layer over S_n indexed by lex_rank. Every successor (width
/// <= width_limit) of a frontier state that is still unreached gets distance
/// `next_depth`. Returns the new frontier, sorted by rank.
std::vector<std::uint64_t> expand_frontier_serial(int n, int width_limit, std::span<const std::uint64_t> frontier,
                                                  std::vector<std::int8_t>& dist, std::int8_t next_depth);
std::vector<std::uint64_t> expand_frontier_parallel(int n, int width_limit, std::span<const std::uint64_t> frontier,
                                                    std::vector<std::int8_t>& dist, std::int8_t next_depth);

/// Ranks of all sigma in S_n avoiding every pattern, ascending.
std::vector<std::uint64_t> avoiders_serial(int n, std::span<const Permutation> basis);
std::vector<std::uint64_t> avoiders_parallel(int n, std::span<const Permutation> basis);

int max_threads();

}  // namespace duploss::kernels
