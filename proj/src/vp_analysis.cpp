#include "duploss/vp_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "duploss/error.hpp"

namespace duploss {

namespace {

int span_size(int from, int to) { return std::abs(from - to) + 1; }

}  // namespace

VpVector vp_vector(const Permutation& sigma, int value) {
  if (value < 1 || value > sigma.size()) {
    throw Error(ErrorKind::ValueOutOfRange, "value " + std::to_string(value) + " outside 1.." +
                                                std::to_string(sigma.size()));
  }
  VpVector v{value, sigma.position_of(value), value, {}};
  if (v.from_position == v.to_position) return v;
  const int lo = std::min(v.from_position, v.to_position);
  const int hi = std::max(v.from_position, v.to_position);
  for (int pos = lo; pos <= hi; ++pos) v.covered.push_back(sigma(pos));
  return v;
}

std::vector<VpVector> vp_vectors(const Permutation& sigma) {
  std::vector<VpVector> out;
  out.reserve(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) out.push_back(vp_vector(sigma, i));
  return out;
}

std::vector<int> vp_coverage(const Permutation& sigma) {
  // Difference array over positions, then mapped back to values.
  const int n = sigma.size();
  const auto pos = sigma.inverse();
  std::vector<int> delta(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    const int from = pos[static_cast<std::size_t>(i - 1)];
    if (from == i) continue;
    ++delta[static_cast<std::size_t>(std::min(from, i))];
    --delta[static_cast<std::size_t>(std::max(from, i)) + 1];
  }
  std::vector<int> by_value(static_cast<std::size_t>(n) + 1, 0);
  int running = 0;
  for (int p = 1; p <= n; ++p) {
    running += delta[static_cast<std::size_t>(p)];
    by_value[static_cast<std::size_t>(sigma(p))] = running;
  }
  return by_value;
}

std::vector<int> vp_domain(const Permutation& sigma) {
  const auto coverage = vp_coverage(sigma);
  std::vector<int> out;
  for (int v = 1; v <= sigma.size(); ++v) {
    if (coverage[static_cast<std::size_t>(v)] > 0) out.push_back(v);
  }
  return out;
}

bool balance_condition_holds(const Permutation& sigma) {
  const auto coverage = vp_coverage(sigma);
  return std::all_of(coverage.begin() + 1, coverage.end(), [](int c) { return c == 0 || c >= 2; });
}

FreeWindowDecomposition free_window_decomposition(const Permutation& sigma) {
  const auto coverage = vp_coverage(sigma);
  FreeWindowDecomposition out;
  const int n = sigma.size();
  int start = 1;
  for (int p = 1; p <= n; ++p) {
    const bool in_domain = coverage[static_cast<std::size_t>(sigma(p))] > 0;
    const bool ends = p == n || in_domain != (coverage[static_cast<std::size_t>(sigma(p + 1))] > 0);
    if (!ends) continue;
    (in_domain ? out.vp_windows : out.free_windows).push_back({start, p});
    start = p + 1;
  }
  return out;
}

bool is_quasi_diagonal(const Permutation& sigma, int value) {
  const int n = sigma.size();
  return (value - 1 >= 1 && value - 1 <= n && sigma(value - 1) == value) ||
         (value + 1 >= 1 && value + 1 <= n && sigma(value + 1) == value);
}

bool check_removal_lemma(const Permutation& sigma) {
  const int n = sigma.size();
  const auto pos = sigma.inverse();
  for (int j = 1; j <= n; ++j) {
    const int removed = sigma(j);
    const auto reduced_pos = remove_at(sigma, j).inverse();
    for (int i = 1; i <= n; ++i) {
      const int from = pos[static_cast<std::size_t>(i - 1)];
      if (i == removed || from == i) continue;
      const int reduced_value = i > removed ? i - 1 : i;
      const int reduced_from = reduced_pos[static_cast<std::size_t>(reduced_value - 1)];
      if (reduced_from == reduced_value) continue;
      if (std::abs(span_size(reduced_from, reduced_value) - span_size(from, i)) > 1) return false;
    }
  }
  return true;
}

int check_one_fixpoint_lemma(const Permutation& sigma) {
  const int baseline = fixpoint_count(sigma);
  for (int j = 1; j <= sigma.size(); ++j) {
    if (fixpoint_count(remove_at(sigma, j)) <= baseline + 1) return j;
  }
  throw Error(ErrorKind::NoWitness, "no single removal keeps fixpoint growth <= 1 for " + sigma.to_string());
}

std::string dump_vp_vectors(const Permutation& sigma) {
  std::ostringstream os;
  for (const auto& v : vp_vectors(sigma)) {
    os << v.value << ": ";
    if (v.empty()) {
      os << "fixpoint\n";
      continue;
    }
    os << v.from_position << " -> " << v.to_position << (v.points_left() ? " left {" : " right {");
    for (std::size_t k = 0; k < v.covered.size(); ++k) os << (k ? "," : "") << v.covered[k];
    os << "}\n";
  }
  return os.str();
}

}  // namespace duploss
