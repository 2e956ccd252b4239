#include "duploss/classes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "duploss/error.hpp"
#include "duploss/kernels.hpp"

namespace duploss {

ClassSpec::ClassSpec(WidthLimit k, int p) : width(k), steps(p) {
  if (!k.is_infinite() && k.value() < 2) throw Error(ErrorKind::InvalidK, "class width must be >= 2");
  if (p < 0) throw Error(ErrorKind::InvalidK, "step budget must be >= 0");
}

std::string_view to_string(BasisProvenance provenance) {
  return provenance == BasisProvenance::TheoremConstructed ? "theorem" : "brute-force";
}

namespace {

bool size_then_lex(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int finite_k(WidthLimit k) {
  const int v = k.value();
  if (v < 2) throw Error(ErrorKind::InvalidK, "K must be >= 2");
  return v;
}

void check_budget(int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "negative size");
  if (n > enumeration_cap()) {
    throw Error(ErrorKind::BudgetExceeded, "n=" + std::to_string(n) + " exceeds the enumeration cap " +
                                               std::to_string(enumeration_cap()) + " (set DUPLOSS_MAX_N)");
  }
}

// Breadth-first distances from identity_n over S_n, grown one layer at a time.
struct DistanceTable {
  int n = 0;
  int width = 0;
  int depth = 0;
  std::vector<std::int8_t> dist;
  std::vector<std::uint64_t> frontier;

  DistanceTable(int size, int k) : n(size), width(k), dist(factorial(size), kernels::kUnreached) {
    dist[0] = 0;  // rank 0 is the identity
    frontier.push_back(0);
  }

  bool exhausted() const { return frontier.empty(); }

  void extend_to(int target_depth) {
    while (depth < target_depth && !exhausted()) {
      frontier = kernels::expand_frontier_parallel(n, width, frontier, dist, static_cast<std::int8_t>(depth + 1));
      ++depth;
    }
  }
};

std::mutex cache_mutex;
std::map<std::pair<int, int>, DistanceTable> cache;

// Caller holds cache_mutex. Width is clamped to n since wider steps do not exist.
DistanceTable& table_for(int n, int k) {
  check_budget(n);
  const int width = std::max(std::min(k, n), 1);
  auto [it, inserted] = cache.try_emplace({n, width}, n, width);
  return it->second;
}

}  // namespace

void clear_reachability_cache() {
  std::lock_guard lock(cache_mutex);
  cache.clear();
}

int enumeration_cap() {
  if (const char* env = std::getenv("DUPLOSS_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("bad DUPLOSS_MAX_N '") + env + "'");
    }
  }
  return 10;
}

bool is_antichain(const std::vector<Permutation>& patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      if (i != j && contains_pattern(patterns[j], patterns[i])) return false;
    }
  }
  return true;
}

std::vector<Permutation> d_set(WidthLimit k) {
  const int width = finite_k(k);
  std::vector<int> values(static_cast<std::size_t>(width) + 1);
  for (int i = 0; i <= width; ++i) values[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    if (values.front() == 1 || values.back() == width + 1) continue;
    const Permutation sigma = Permutation::unchecked(values);
    if (descent_count(sigma) == 1) out.push_back(sigma);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

PatternBasis theorem_basis_one_step(WidthLimit k) {
  PatternBasis basis;
  basis.provenance = BasisProvenance::TheoremConstructed;
  basis.patterns = {Permutation::from_one_line({3, 2, 1}), Permutation::from_one_line({3, 1, 4, 2}),
                    Permutation::from_one_line({2, 1, 4, 3})};
  for (auto& p : d_set(k)) basis.patterns.push_back(std::move(p));
  std::sort(basis.patterns.begin(), basis.patterns.end(), size_then_lex);
  basis.antichain = is_antichain(basis.patterns);
  return basis;
}

std::vector<Permutation> enumerate_class(const ClassSpec& spec, int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "class enumeration needs n >= 1");
  std::lock_guard lock(cache_mutex);
  DistanceTable& table = table_for(n, spec.width.resolve(n));
  table.extend_to(spec.steps);
  std::vector<Permutation> out;
  for (std::uint64_t r = 0; r < table.dist.size(); ++r) {
    const auto d = table.dist[r];
    if (d != kernels::kUnreached && d <= spec.steps) out.push_back(lex_unrank(n, r));
  }
  return out;
}

bool is_member(const Permutation& sigma, const ClassSpec& spec) {
  const int n = sigma.size();
  std::lock_guard lock(cache_mutex);
  DistanceTable& table = table_for(n, spec.width.resolve(n));
  table.extend_to(spec.steps);
  const auto d = table.dist[lex_rank(sigma.values())];
  return d != kernels::kUnreached && d <= spec.steps;
}

PatternBasis minimal_forbidden_basis(const ClassSpec& spec, int max_size) {
  check_budget(max_size);
  PatternBasis basis;
  basis.provenance = BasisProvenance::BruteForce;
  basis.antichain = true;

  std::lock_guard lock(cache_mutex);
  for (int m = 1; m <= max_size; ++m) {
    DistanceTable& outer = table_for(m, spec.width.resolve(m));
    outer.extend_to(spec.steps);
    DistanceTable& inner = table_for(m - 1, spec.width.resolve(m - 1));
    inner.extend_to(spec.steps);
    auto member = [&](const DistanceTable& t, std::uint64_t r) {
      return t.dist[r] != kernels::kUnreached && t.dist[r] <= spec.steps;
    };
    for (std::uint64_t r = 0; r < outer.dist.size(); ++r) {
      if (member(outer, r)) continue;
      const Permutation sigma = lex_unrank(m, r);
      bool minimal = true;
      for (int pos = 1; pos <= m && minimal; ++pos) {
        minimal = member(inner, lex_rank(remove_at(sigma, pos).values()));
      }
      if (minimal) basis.patterns.push_back(sigma);
    }
  }
  return basis;
}

int bfs_min_steps(const Permutation& sigma, WidthLimit k) {
  const int n = sigma.size();
  if (!k.is_infinite() && k.value() < 2 && !sigma.is_identity()) {
    throw Error(ErrorKind::InvalidK, "K must be >= 2");
  }
  std::lock_guard lock(cache_mutex);
  DistanceTable& table = table_for(n, k.resolve(n));
  const std::uint64_t r = lex_rank(sigma.values());
  while (table.dist[r] == kernels::kUnreached && !table.exhausted()) table.extend_to(table.depth + 1);
  return table.dist[r];
}

std::vector<Permutation> avoiders(const std::vector<Permutation>& basis, int n) {
  check_budget(n);
  std::vector<Permutation> out;
  for (std::uint64_t r : kernels::avoiders_parallel(n, basis)) out.push_back(lex_unrank(n, r));
  return out;
}

}  // namespace duploss
