// Serial reference vs OpenMP kernels: timings and a result-equality check.
//
//   kernels_bench [n=9] [K=4] [reps=3]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "duploss/classes.hpp"
#include "duploss/experiments.hpp"
#include "duploss/kernels.hpp"

using namespace duploss;

namespace {

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

template <class Expand>
std::vector<std::int8_t> full_bfs(int n, int k, Expand expand) {
  std::vector<std::int8_t> dist(factorial(n), kernels::kUnreached);
  dist[0] = 0;
  std::vector<std::uint64_t> frontier{0};
  for (std::int8_t d = 1; !frontier.empty(); ++d) frontier = expand(n, k, frontier, dist, d);
  return dist;
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(2)
            << " serial " << std::setw(10) << serial << " ms   parallel " << std::setw(10) << parallel
            << " ms   speedup " << std::setw(5) << serial / parallel << (same ? "   results match" : "   MISMATCH")
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 9;
  const int k = argc > 2 ? std::atoi(argv[2]) : 4;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;
  std::cout << "threads=" << kernels::max_threads() << " n=" << n << " K=" << k << " reps=" << reps << '\n';
  bool all_same = true;

  {
    std::vector<std::int8_t> a, b;
    const double s = best_ms(reps, [&] { a = full_bfs(n, k, kernels::expand_frontier_serial); });
    const double p = best_ms(reps, [&] { b = full_bfs(n, k, kernels::expand_frontier_parallel); });
    report("bfs over S_n", s, p, a == b);
    all_same &= a == b;
  }
  {
    const auto basis = theorem_basis_one_step(WidthLimit(k)).patterns;
    std::vector<std::uint64_t> a, b;
    const double s = best_ms(reps, [&] { a = kernels::avoiders_serial(n, basis); });
    const double p = best_ms(reps, [&] { b = kernels::avoiders_parallel(n, basis); });
    report("avoiders of one-step basis", s, p, a == b);
    all_same &= a == b;
  }
  {
    BenchConfig config{WidthPolicy{WidthPolicy::Kind::Constant, 8}, {128, 256, 512}, 16, 7, false};
    std::vector<BenchRow> a, b;
    const double s = best_ms(reps, [&] { a = run_benchmark_serial(config); });
    const double p = best_ms(reps, [&] { b = run_benchmark(config); });
    report("bucket benchmark rows", s, p, a == b);
    all_same &= a == b;
  }
  return all_same ? 0 : 1;
}
