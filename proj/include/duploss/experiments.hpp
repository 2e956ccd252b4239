#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "duploss/permutation.hpp"

namespace duploss {

/// K as a function of n. Evaluated values are clamped to [2, n] (to 2 when n < 2).
struct WidthPolicy {
  enum class Kind { Constant, Full, NOverLog, Sqrt };

  Kind kind = Kind::Constant;
  int constant = 2;

  int evaluate(int n) const;
  /// "const:8", "full", "n_over_log", "sqrt"
  std::string to_string() const;
  static WidthPolicy parse(const std::string& text);
};

/// Uniform over S_n, deterministic per (n, seed). mt19937_64 + Fisher-Yates.
Permutation random_permutation(int n, std::uint64_t seed);

/// Worst-case certified lower bound over S_n:
/// max(ceil(log2 n), ceil((n(n-1)/2) / floor(K^2/4))).
std::int64_t lower_bound_steps(int n, int width_limit);

/// The same two ingredients for one permutation:
/// max(ceil(log2(desc+1)), ceil(inversions / floor(K^2/4))).
std::int64_t certified_min_steps(const Permutation& sigma, int width_limit);

struct BenchRow {
  int n = 0;
  int k = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  std::int64_t inversions = 0;
  int descents = 0;
  double wall_time_ms = 0.0;

  bool operator==(const BenchRow&) const = default;
};

struct BenchConfig {
  WidthPolicy policy;
  std::vector<int> sizes;
  int samples = 1;
  std::uint64_t seed = 1;
  bool record_time = false;
};

/// Per size: `samples` random permutations (seed + sample index) followed by
/// the reversed identity. Every scenario is replay-verified; a mismatch throws.
/// Rows come out in (size, sample) order.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);
std::vector<BenchRow> run_benchmark_serial(const BenchConfig& config);

inline constexpr const char* kCsvSchema = "# duploss-bench-csv v1";
inline constexpr const char* kCsvHeader = "n,K,algorithm,seed,steps,inversions,descents,wall_time_ms";

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace duploss
