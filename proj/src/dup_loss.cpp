#include "duploss/dup_loss.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "duploss/error.hpp"

namespace duploss {

void validate_step(const DupLossStep& step, int n) {
  if (step.width < 1 || step.start < 1 || step.start + step.width - 1 > n) {
    throw Error(ErrorKind::WindowOutOfRange,
                "window start=" + std::to_string(step.start) + " width=" + std::to_string(step.width) +
                    " does not fit n=" + std::to_string(n));
  }
  int previous = 0;
  for (int offset : step.keep) {
    if (offset <= previous || offset > step.width) {
      throw Error(ErrorKind::WindowOutOfRange,
                  "keep offsets must be strictly increasing within 1.." + std::to_string(step.width));
    }
    previous = offset;
  }
}

void apply_step_inplace(std::span<int> values, const DupLossStep& step) {
  assert(step.start >= 1 && step.start + step.width - 1 <= static_cast<int>(values.size()));
  auto window = values.subspan(static_cast<std::size_t>(step.start - 1), static_cast<std::size_t>(step.width));
  std::vector<int> second;
  second.reserve(window.size());
  std::size_t write = 0;
  std::size_t next_keep = 0;
  for (std::size_t o = 0; o < window.size(); ++o) {
    if (next_keep < step.keep.size() && step.keep[next_keep] == static_cast<int>(o) + 1) {
      window[write++] = window[o];
      ++next_keep;
    } else {
      second.push_back(window[o]);
    }
  }
  std::copy(second.begin(), second.end(), window.begin() + static_cast<std::ptrdiff_t>(write));
}

void apply_mask_inplace(std::span<int> values, int start, int width, std::uint64_t mask) {
  int buffer[64];
  int* window = values.data() + (start - 1);
  int write = 0;
  int tail = 0;
  for (int o = 0; o < width; ++o) {
    if (mask >> o & 1U) {
      window[write++] = window[o];
    } else {
      buffer[tail++] = window[o];
    }
  }
  std::copy(buffer, buffer + tail, window + write);
}

Permutation apply_step(const Permutation& pi, const DupLossStep& step) {
  validate_step(step, pi.size());
  std::vector<int> values(pi.values().begin(), pi.values().end());
  apply_step_inplace(values, step);
  return Permutation::unchecked(std::move(values));
}

std::vector<Permutation> successors(const Permutation& pi, int width_limit) {
  if (width_limit < 1) throw Error(ErrorKind::InvalidK, "width limit must be >= 1");
  const int n = pi.size();
  const int k_max = std::min(width_limit, n);
  std::set<std::vector<int>> seen;
  const std::vector<int> base(pi.values().begin(), pi.values().end());
  seen.insert(base);
  std::vector<int> scratch(base.size());
  // Width 1 and the all/none masks are no-ops; pi is already in the set.
  for (int width = 2; width <= k_max; ++width) {
    const std::uint64_t full = (std::uint64_t{1} << width) - 1;
    for (int start = 1; start + width - 1 <= n; ++start) {
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        std::copy(base.begin(), base.end(), scratch.begin());
        apply_mask_inplace(scratch, start, width, mask);
        seen.insert(scratch);
      }
    }
  }
  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(Permutation::unchecked(v));
  return out;
}

std::int64_t inversions_created(const Permutation& pi, const DupLossStep& step) {
  return inversions(apply_step(pi, step)) - inversions(pi);
}

}  // namespace duploss
