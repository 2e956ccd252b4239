#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace duploss {

/// A permutation of {1..n} in one-line notation.
///
/// Positions and values are 1-indexed in every public accessor. The empty
/// permutation is valid. Instances are immutable once built; every operation
/// returns a new value.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a bijection on {1..n}.
  static Permutation from_one_line(std::vector<int> values);
  static Permutation from_one_line(std::initializer_list<int> values) {
    return from_one_line(std::vector<int>(values));
  }

  /// Parses "5,2,4,3,1,6". A string of digits without commas ("524316") is
  /// read one value per digit, which only makes sense for n <= 9.
  static Permutation parse(std::string_view text);

  /// Skips validation; the caller guarantees a bijection on {1..n}.
  static Permutation unchecked(std::vector<int> values) { return Permutation(std::move(values)); }

  static Permutation identity(int n);
  static Permutation reversed(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-indexed position i.
  int operator()(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }
  /// 1-indexed position of value v (linear scan).
  int position_of(int value) const;

  std::span<const int> values() const noexcept { return values_; }
  std::vector<int> inverse() const;

  bool is_identity() const;

  /// "5,2,4,3,1,6"
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Rank-normalizes a sequence of distinct integers to a permutation of
/// {1..k} with the same relative order.
Permutation normalize(std::span<const int> distinct_values);

/// Strictly increasing 1-indexed positions into a host permutation.
struct Occurrence {
  std::vector<int> indices;

  auto operator<=>(const Occurrence&) const = default;
};

/// Closed 1-indexed range of positions.
struct IndexRange {
  int first = 1;
  int last = 0;

  int width() const noexcept { return last - first + 1; }
  bool contains(int position) const noexcept { return first <= position && position <= last; }
  auto operator<=>(const IndexRange&) const = default;
};

std::vector<int> descents(const Permutation& sigma);
int descent_count(const Permutation& sigma);
std::int64_t inversions(const Permutation& sigma);
int fixpoint_count(const Permutation& sigma);

bool contains_pattern(const Permutation& sigma, const Permutation& pattern);
/// All occurrences, lexicographic by index tuple.
std::vector<Occurrence> occurrences(const Permutation& sigma, const Permutation& pattern);

/// Removes the entry at `position` and renormalizes the rest to {1..n-1}.
Permutation remove_at(const Permutation& sigma, int position);

/// Maximal increasing substrings, left to right. Always desc(sigma)+1 runs
/// for a non-empty permutation.
std::vector<IndexRange> ascending_runs(const Permutation& sigma);

/// Lehmer-code rank of sigma in lexicographic order of S_n. Valid for n <= 20.
std::uint64_t lex_rank(std::span<const int> values);
Permutation lex_unrank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

}  // namespace duploss
