#include "duploss/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "duploss/error.hpp"

namespace duploss {

Permutation Permutation::from_one_line(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw Error(ErrorKind::OutOfRange,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::DuplicateValue, "value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> values;
  if (text.empty()) return Permutation{};

  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::Parse, "unexpected character '" + std::string(1, c) + "'");
      }
      values.push_back(c - '0');
    }
    return from_one_line(std::move(values));
  }

  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = trim(text.substr(begin, end - begin));
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::Parse, "bad token '" + std::string(token) + "'");
    }
    values.push_back(v);
    begin = end + 1;
  }
  return from_one_line(std::move(values));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) {
    throw Error(ErrorKind::ValueOutOfRange, "value " + std::to_string(value) + " not present");
  }
  return static_cast<int>(it - values_.begin()) + 1;
}

std::vector<int> Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation normalize(std::span<const int> distinct_values) {
  std::vector<int> order(distinct_values.begin(), distinct_values.end());
  std::sort(order.begin(), order.end());
  std::vector<int> out;
  out.reserve(distinct_values.size());
  for (int v : distinct_values) {
    out.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), v) - order.begin()) + 1);
  }
  return Permutation::unchecked(std::move(out));
}

std::vector<int> descents(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) out.push_back(i);
  }
  return out;
}

int descent_count(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i < sigma.size(); ++i) count += sigma(i) > sigma(i + 1);
  return count;
}

std::int64_t inversions(const Permutation& sigma) {
  // Fenwick tree over values seen so far.
  const int n = sigma.size();
  std::vector<int> tree(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t count = 0;
  for (int i = n; i >= 1; --i) {
    for (int v = sigma(i) - 1; v > 0; v -= v & -v) count += tree[static_cast<std::size_t>(v)];
    for (int v = sigma(i); v <= n; v += v & -v) ++tree[static_cast<std::size_t>(v)];
  }
  return count;
}

int fixpoint_count(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i <= sigma.size(); ++i) count += sigma(i) == i;
  return count;
}

namespace {

// Depth-first search over index tuples. Each chosen entry is checked against
// all earlier entries, so any inconsistent prefix is cut immediately.
template <class Visit>
bool search_occurrences(const Permutation& sigma, const Permutation& pattern, Visit&& visit) {
  const int n = sigma.size();
  const int k = pattern.size();
  if (k == 0) return visit(std::vector<int>{});
  if (k > n) return false;

  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));

  auto consistent = [&](int depth, int position) {
    const int value = sigma(position);
    const int pv = pattern(depth + 1);
    for (int t = 0; t < depth; ++t) {
      const bool host_less = sigma(chosen[static_cast<std::size_t>(t)]) < value;
      const bool pattern_less = pattern(t + 1) < pv;
      if (host_less != pattern_less) return false;
    }
    return true;
  };

  auto recurse = [&](auto& self, int depth, int from) -> bool {
    if (depth == k) return visit(chosen);
    for (int pos = from; pos <= n - (k - depth - 1); ++pos) {
      if (!consistent(depth, pos)) continue;
      chosen.push_back(pos);
      if (self(self, depth + 1, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return recurse(recurse, 0, 1);
}

}  // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
  return search_occurrences(sigma, pattern, [](const std::vector<int>&) { return true; });
}

std::vector<Occurrence> occurrences(const Permutation& sigma, const Permutation& pattern) {
  std::vector<Occurrence> out;
  search_occurrences(sigma, pattern, [&](const std::vector<int>& idx) {
    out.push_back(Occurrence{idx});
    return false;
  });
  return out;
}

Permutation remove_at(const Permutation& sigma, int position) {
  if (position < 1 || position > sigma.size()) {
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(position) + " outside 1.." + std::to_string(sigma.size()));
  }
  const int removed = sigma(position);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(sigma.size() - 1));
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i == position) continue;
    const int v = sigma(i);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation::unchecked(std::move(out));
}

std::vector<IndexRange> ascending_runs(const Permutation& sigma) {
  std::vector<IndexRange> runs;
  if (sigma.empty()) return runs;
  int start = 1;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) {
      runs.push_back({start, i});
      start = i + 1;
    }
  }
  runs.push_back({start, sigma.size()});
  return runs;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lex_rank(std::span<const int> values) {
  // O(n^2) Lehmer code; n is at most the enumeration cap.
  const std::size_t n = values.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += values[j] < values[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    out.push_back(*it);
    pool.erase(it);
  }
  return Permutation::unchecked(std::move(out));
}

}  // namespace duploss
