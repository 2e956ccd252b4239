#include "duploss/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <stdexcept>

#include "duploss/error.hpp"
#include "duploss/scenarios.hpp"

namespace duploss {

int WidthPolicy::evaluate(int n) const {
  int k = 2;
  switch (kind) {
    case Kind::Constant: k = constant; break;
    case Kind::Full: k = n; break;
    case Kind::NOverLog:
      k = n < 2 ? 2 : static_cast<int>(std::ceil(static_cast<double>(n) / std::log2(static_cast<double>(n))));
      break;
    case Kind::Sqrt: k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))); break;
  }
  return std::max(2, std::min(k, n));
}

std::string WidthPolicy::to_string() const {
  switch (kind) {
    case Kind::Constant: return "const:" + std::to_string(constant);
    case Kind::Full: return "full";
    case Kind::NOverLog: return "n_over_log";
    case Kind::Sqrt: return "sqrt";
  }
  return "?";
}

WidthPolicy WidthPolicy::parse(const std::string& text) {
  if (text == "full") return {Kind::Full, 0};
  if (text == "n_over_log") return {Kind::NOverLog, 0};
  if (text == "sqrt") return {Kind::Sqrt, 0};
  std::string digits = text;
  if (digits.rfind("const:", 0) == 0) digits = digits.substr(6);
  try {
    std::size_t used = 0;
    const int c = std::stoi(digits, &used);
    if (used == digits.size() && c >= 2) return {Kind::Constant, c};
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "unknown width policy '" + text + "' (const:C, full, n_over_log, sqrt)");
}

Permutation random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(pick(rng))]);
  }
  return Permutation::unchecked(std::move(values));
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t per_step_inversions(int width_limit) {
  return static_cast<std::int64_t>(width_limit) * width_limit / 4;
}

BenchRow run_one(int n, int k, std::string algorithm, std::uint64_t seed, const Permutation& sigma,
                 bool record_time) {
  const auto t0 = std::chrono::steady_clock::now();
  const Scenario sc = bucket_scenario(sigma, k);
  const auto t1 = std::chrono::steady_clock::now();
  if (replay(sc) != sigma) {
    throw std::logic_error("bucket scenario failed replay for n=" + std::to_string(n) + " seed=" +
                           std::to_string(seed));
  }
  BenchRow row;
  row.n = n;
  row.k = k;
  row.algorithm = std::move(algorithm);
  row.seed = seed;
  row.steps = static_cast<std::int64_t>(sc.step_count());
  row.inversions = inversions(sigma);
  row.descents = descent_count(sigma);
  if (record_time) row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

struct Job {
  int n;
  int sample;  // == samples for the reversed identity
};

std::vector<Job> jobs_for(const BenchConfig& config) {
  if (config.samples < 1) throw Error(ErrorKind::OutOfRange, "samples must be >= 1");
  std::vector<Job> jobs;
  for (int n : config.sizes) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "sizes must be >= 1");
    for (int s = 0; s <= config.samples; ++s) jobs.push_back({n, s});
  }
  return jobs;
}

BenchRow run_job(const BenchConfig& config, const Job& job) {
  const int k = config.policy.evaluate(job.n);
  if (job.sample == config.samples) {
    return run_one(job.n, k, "bucket_reversed", config.seed, Permutation::reversed(job.n), config.record_time);
  }
  const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(job.sample);
  return run_one(job.n, k, "bucket", seed, random_permutation(job.n, seed), config.record_time);
}

}  // namespace

std::int64_t lower_bound_steps(int n, int width_limit) {
  if (n <= 1) return 0;
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  return std::max<std::int64_t>(ceil_log2(n), ceil_div(pairs, per_step_inversions(width_limit)));
}

std::int64_t certified_min_steps(const Permutation& sigma, int width_limit) {
  return std::max<std::int64_t>(ceil_log2(descent_count(sigma) + 1),
                                ceil_div(inversions(sigma), per_step_inversions(width_limit)));
}

std::vector<BenchRow> run_benchmark_serial(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const Job& job : jobs_for(config)) rows.push_back(run_job(config, job));
  return rows;
}

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
  const auto jobs = jobs_for(config);
  std::vector<BenchRow> rows(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = run_job(config, jobs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(duploss_bench_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kCsvSchema << '\n' << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << r.algorithm << ',' << r.seed << ',' << r.steps << ',' << r.inversions << ','
       << r.descents << ',' << std::fixed << std::setprecision(3) << r.wall_time_ms << '\n';
    os.unsetf(std::ios::floatfield);
  }
}

}  // namespace duploss
