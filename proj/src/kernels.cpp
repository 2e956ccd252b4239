#include "duploss/kernels.hpp"

#include <algorithm>

#include "duploss/dup_loss.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace duploss::kernels {

namespace {

// Calls emit(rank) for every non-trivial one-step successor of `state`.
template <class Emit>
void for_each_successor_rank(std::span<const int> state, int width_limit, std::vector<int>& scratch, Emit&& emit) {
  const int n = static_cast<int>(state.size());
  const int k_max = std::min(width_limit, n);
  for (int width = 2; width <= k_max; ++width) {
    const std::uint64_t full = (std::uint64_t{1} << width) - 1;
    for (int start = 1; start + width - 1 <= n; ++start) {
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        std::copy(state.begin(), state.end(), scratch.begin());
        apply_mask_inplace(scratch, start, width, mask);
        emit(lex_rank(scratch));
      }
    }
  }
}

}  // namespace

std::vector<std::uint64_t> expand_frontier_serial(int n, int width_limit, std::span<const std::uint64_t> frontier,
                                                  std::vector<std::int8_t>& dist, std::int8_t next_depth) {
  std::vector<std::uint64_t> next;
  std::vector<int> scratch(static_cast<std::size_t>(n));
  for (std::uint64_t rank : frontier) {
    const Permutation state = lex_unrank(n, rank);
    for_each_successor_rank(state.values(), width_limit, scratch, [&](std::uint64_t r) {
      if (dist[r] == kUnreached) {
        dist[r] = next_depth;
        next.push_back(r);
      }
    });
  }
  std::sort(next.begin(), next.end());
  return next;
}

std::vector<std::uint64_t> expand_frontier_parallel(int n, int width_limit, std::span<const std::uint64_t> frontier,
                                                    std::vector<std::int8_t>& dist, std::int8_t next_depth) {
  // Workers only read `dist` and collect candidates; insertion into the
  // visited set happens in the serial merge below.
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(max_threads()));

#pragma omp parallel
  {
#ifdef _OPENMP
    auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& local = found[0];
#endif
    std::vector<int> scratch(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      const Permutation state = lex_unrank(n, frontier[static_cast<std::size_t>(i)]);
      for_each_successor_rank(state.values(), width_limit, scratch, [&](std::uint64_t r) {
        if (dist[r] == kUnreached) local.push_back(r);
      });
    }
  }

  std::vector<std::uint64_t> next;
  for (const auto& local : found) {
    for (std::uint64_t r : local) {
      if (dist[r] == kUnreached) {
        dist[r] = next_depth;
        next.push_back(r);
      }
    }
  }
  std::sort(next.begin(), next.end());
  return next;
}

namespace {

bool avoids_all(const Permutation& sigma, std::span<const Permutation> basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [&](const Permutation& pattern) { return contains_pattern(sigma, pattern); });
}

}  // namespace

std::vector<std::uint64_t> avoiders_serial(int n, std::span<const Permutation> basis) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (avoids_all(lex_unrank(n, r), basis)) out.push_back(r);
  }
  return out;
}

std::vector<std::uint64_t> avoiders_parallel(int n, std::span<const Permutation> basis) {
  const auto total = static_cast<std::int64_t>(factorial(n));
  std::vector<char> keep(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t r = 0; r < total; ++r) {
    keep[static_cast<std::size_t>(r)] = avoids_all(lex_unrank(n, static_cast<std::uint64_t>(r)), basis);
  }
  std::vector<std::uint64_t> out;
  for (std::int64_t r = 0; r < total; ++r) {
    if (keep[static_cast<std::size_t>(r)]) out.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace duploss::kernels
