#include "duploss/scenarios.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "duploss/error.hpp"

namespace duploss {

int WidthLimit::value() const {
  if (!k_) throw Error(ErrorKind::InfiniteK, "width limit is unbounded");
  return *k_;
}

std::string WidthLimit::to_string() const { return k_ ? std::to_string(*k_) : "inf"; }

WidthLimit WidthLimit::parse(const std::string& text) {
  if (text == "inf" || text == "infinite" || text == "oo") return infinite();
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad width '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorKind::Parse, "bad width '" + text + "'");
  if (k < 1) throw Error(ErrorKind::InvalidK, "width must be >= 1");
  return WidthLimit(k);
}

int ceil_log2(std::int64_t x) {
  int bits = 0;
  while ((std::int64_t{1} << bits) < x) ++bits;
  return bits;
}

namespace {

std::vector<int> run_labels_by_value(std::span<const int> target, int n) {
  // Zero-based run index per value: the r-th maximal increasing substring
  // (r = 1, 2, ...) gets label r - 1.
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  int run = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (i > 0 && target[i - 1] > target[i]) ++run;
    label[static_cast<std::size_t>(target[i])] = run;
  }
  return label;
}

// Appends radix steps for the window and applies them to `values`.
void append_radix_steps(std::vector<int>& values, IndexRange range, std::span<const int> target,
                        std::vector<DupLossStep>& out) {
  const int n = static_cast<int>(values.size());
  const auto labels = run_labels_by_value(target, n);
  int runs = target.empty() ? 0 : 1;
  for (std::size_t i = 1; i < target.size(); ++i) runs += target[i - 1] > target[i];
  const int passes = runs == 0 ? 0 : ceil_log2(runs);

  for (int bit = 0; bit < passes; ++bit) {
    DupLossStep step{range.first, range.width(), {}};
    for (int o = 1; o <= range.width(); ++o) {
      const int v = values[static_cast<std::size_t>(range.first + o - 2)];
      if ((labels[static_cast<std::size_t>(v)] >> bit & 1) == 0) step.keep.push_back(o);
    }
    apply_step_inplace(values, step);
    out.push_back(std::move(step));
  }
}

// Phase-1 convoy on a mutable buffer; `is_member` is indexed by value.
void append_convoy_steps(std::vector<int>& values, const std::vector<char>& is_member, int member_count,
                         IndexRange target, int width_limit, std::vector<DupLossStep>& out) {
  const int n = static_cast<int>(values.size());
  auto member_at = [&](int position) {
    return is_member[static_cast<std::size_t>(values[static_cast<std::size_t>(position - 1)])] != 0;
  };
  for (int pos = target.last + 1; pos <= n; ++pos) {
    if (member_at(pos)) throw std::logic_error("convoy member lies right of its target block");
  }
  if (member_count == 0) return;

  int leftmost = 1;
  while (true) {
    while (!member_at(leftmost)) ++leftmost;

    bool placed = leftmost == target.first;
    for (int pos = target.first; placed && pos <= target.last; ++pos) placed = member_at(pos);
    if (placed) return;

    DupLossStep step;
    if (target.last - leftmost + 1 <= width_limit) {
      step.start = std::max(1, target.last - width_limit + 1);
      step.width = target.last - step.start + 1;
    } else {
      step.start = leftmost;
      step.width = width_limit;
    }
    for (int o = 1; o <= step.width; ++o) {
      if (!member_at(step.start + o - 1)) step.keep.push_back(o);
    }
    apply_step_inplace(values, step);
    out.push_back(std::move(step));
  }
}

void check_k(int width_limit) {
  if (width_limit < 2) throw Error(ErrorKind::InvalidK, "bucket scenario needs K >= 2");
}

}  // namespace

Scenario radix_scenario(const SubWindowTarget& target, int n) {
  const IndexRange range = target.positions;
  if (range.first < 1 || range.last > n || range.width() < 0) {
    throw Error(ErrorKind::WindowOutOfRange, "window does not fit n=" + std::to_string(n));
  }
  if (static_cast<int>(target.current.size()) != range.width() ||
      static_cast<int>(target.target.size()) != range.width()) {
    throw Error(ErrorKind::NotSortedWindow, "window content size does not match the range");
  }
  if (!std::is_sorted(target.current.begin(), target.current.end()) ||
      std::adjacent_find(target.current.begin(), target.current.end()) != target.current.end()) {
    throw Error(ErrorKind::NotSortedWindow, "current window content is not increasing");
  }
  std::vector<int> sorted_target = target.target;
  std::sort(sorted_target.begin(), sorted_target.end());
  if (sorted_target != target.current) {
    throw Error(ErrorKind::NotSortedWindow, "target is not a rearrangement of the window content");
  }
  if (!target.current.empty() && (target.current.front() < 1 || target.current.back() > n)) {
    throw Error(ErrorKind::ValueOutOfRange, "window values outside 1..n");
  }

  // Only the window is touched, so the rest of the buffer can be anything.
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::copy(target.current.begin(), target.current.end(), values.begin() + (range.first - 1));
  Scenario sc{n, WidthLimit(std::max(range.width(), 1)), {}};
  append_radix_steps(values, range, target.target, sc.steps);
  return sc;
}

Scenario radix_scenario(const Permutation& sigma) {
  const int n = sigma.size();
  SubWindowTarget t{{1, n}, {}, {sigma.values().begin(), sigma.values().end()}};
  t.current.resize(static_cast<std::size_t>(n));
  std::iota(t.current.begin(), t.current.end(), 1);
  Scenario sc = radix_scenario(t, n);
  sc.width_limit = WidthLimit::infinite();
  return sc;
}

std::vector<IndexRange> bucket_windows(int n, int width_limit) {
  check_k(width_limit);
  std::vector<IndexRange> windows;
  if (n <= width_limit) {
    windows.push_back({1, n});
    return windows;
  }
  const int half = width_limit / 2;
  const int blocks = (n - width_limit + half - 1) / half;
  for (int i = 1; i <= blocks; ++i) windows.push_back({n - i * half + 1, n - (i - 1) * half});
  windows.push_back({1, n - blocks * half});
  return windows;
}

BucketTrace bucket_trace(const Permutation& sigma, int width_limit) {
  check_k(width_limit);
  const int n = sigma.size();
  const auto windows = bucket_windows(n, width_limit);
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);

  BucketTrace trace;
  trace.scenario = Scenario{n, WidthLimit(width_limit), {}};
  auto& steps = trace.scenario.steps;

  auto sigma_slice = [&](IndexRange r) {
    return sigma.values().subspan(static_cast<std::size_t>(r.first - 1), static_cast<std::size_t>(r.width()));
  };

  // Phase 1: deliver each right-anchored block's values, right to left.
  std::vector<char> is_member(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t w = 0; w + 1 < windows.size(); ++w) {
    const IndexRange block = windows[w];
    for (int v : sigma_slice(block)) is_member[static_cast<std::size_t>(v)] = 1;
    append_convoy_steps(values, is_member, block.width(), block, width_limit, steps);
    for (int v : sigma_slice(block)) is_member[static_cast<std::size_t>(v)] = 0;
  }
  trace.phase1_steps = steps.size();
  trace.after_phase1 = Permutation::unchecked(values);

  // Phase 2: radix inside each window; the leftmost window comes last.
  for (const IndexRange& window : windows) {
    assert(std::is_sorted(values.begin() + (window.first - 1), values.begin() + window.last));
    append_radix_steps(values, window, sigma_slice(window), steps);
  }
  return trace;
}

Scenario bucket_scenario(const Permutation& sigma, int width_limit) {
  return bucket_trace(sigma, width_limit).scenario;
}

std::vector<DupLossStep> phase1_move_block(const Permutation& pi, const std::set<int>& members,
                                           IndexRange target_range, int width_limit) {
  check_k(width_limit);
  const int n = pi.size();
  if (static_cast<int>(members.size()) > width_limit / 2) {
    throw Error(ErrorKind::TooManyMembers, std::to_string(members.size()) + " members exceed floor(K/2) = " +
                                               std::to_string(width_limit / 2));
  }
  if (target_range.first < 1 || target_range.last > n ||
      target_range.width() != static_cast<int>(members.size())) {
    throw Error(ErrorKind::WindowOutOfRange, "target range must fit n and match the member count");
  }
  std::vector<char> is_member(static_cast<std::size_t>(n) + 1, 0);
  for (int v : members) {
    if (v < 1 || v > n) throw Error(ErrorKind::ValueOutOfRange, "member " + std::to_string(v));
    is_member[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> values(pi.values().begin(), pi.values().end());
  std::vector<DupLossStep> steps;
  append_convoy_steps(values, is_member, static_cast<int>(members.size()), target_range, width_limit, steps);
  return steps;
}

Permutation replay(const Scenario& scenario) {
  const int cap = scenario.width_limit.resolve(scenario.n);
  std::vector<int> values(static_cast<std::size_t>(scenario.n));
  std::iota(values.begin(), values.end(), 1);
  for (const auto& step : scenario.steps) {
    if (step.width > cap) {
      throw Error(ErrorKind::WidthExceeded,
                  "step width " + std::to_string(step.width) + " exceeds K=" + scenario.width_limit.to_string());
    }
    validate_step(step, scenario.n);
    apply_step_inplace(values, step);
  }
  return Permutation::unchecked(std::move(values));
}

}  // namespace duploss
