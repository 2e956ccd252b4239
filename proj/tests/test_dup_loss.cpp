#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "duploss/dup_loss.hpp"
#include "duploss/error.hpp"

using namespace duploss;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

std::vector<Permutation> Ps(std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (const char* t : texts) out.push_back(P(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> offsets_of_mask(int width, unsigned mask) {
  std::vector<int> keep;
  for (int o = 1; o <= width; ++o)
    if (mask >> (o - 1) & 1U) keep.push_back(o);
  return keep;
}

template <class F>
void for_each_step(int n, int k_max, F&& f) {
  for (int width = 1; width <= std::min(k_max, n); ++width)
    for (int start = 1; start + width - 1 <= n; ++start)
      for (unsigned mask = 0; mask < (1U << width); ++mask) f(DupLossStep{start, width, offsets_of_mask(width, mask)});
}

}  // namespace

TEST_CASE("the illustrated width-4 step") {
  CHECK(apply_step(Permutation::identity(7), {3, 4, {2, 3}}) == P("1245367"));
}

TEST_CASE("full and empty keep sets are no-ops") {
  const auto pi = P("3142");
  CHECK(apply_step(pi, {1, 4, {1, 2, 3, 4}}) == pi);
  CHECK(apply_step(pi, {1, 4, {}}) == pi);
  CHECK(apply_step(pi, {2, 1, {1}}) == pi);
}

TEST_CASE("apply_step rejects windows that do not fit") {
  const auto pi = Permutation::identity(4);
  CHECK_THROWS_AS(apply_step(pi, {2, 4, {}}), Error);
  CHECK_THROWS_AS(apply_step(pi, {0, 2, {}}), Error);
  CHECK_THROWS_AS(apply_step(pi, {1, 2, {3}}), Error);
  CHECK_THROWS_AS(apply_step(pi, {1, 3, {2, 1}}), Error);
  try {
    apply_step(pi, {4, 2, {}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowOutOfRange);
  }
}

TEST_CASE("successors of small identities") {
  CHECK(successors(P("12"), 2) == Ps({"12", "21"}));
  CHECK(successors(P("123"), 3) == Ps({"123", "132", "213", "231", "312"}));
  CHECK(successors(P("123"), 2) == Ps({"123", "213", "132"}));
  CHECK(successors(P("123"), 1) == Ps({"123"}));
  CHECK(successors(P("123"), 99) == successors(P("123"), 3));
}

TEST_CASE("one step from identity creates at most one descent") {
  for (int n = 1; n <= 7; ++n) {
    for_each_step(n, n, [&](const DupLossStep& s) {
      CHECK(descent_count(apply_step(Permutation::identity(n), s)) <= 1);
    });
  }
}

TEST_CASE("apply_step splits the window into two order-preserving subsequences") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 9;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const auto pi = Permutation::from_one_line(v);
    const int width = 1 + static_cast<int>(rng() % n);
    const int start = 1 + static_cast<int>(rng() % (n - width + 1));
    const auto keep = offsets_of_mask(width, static_cast<unsigned>(rng()) & ((1U << width) - 1));
    const auto out = apply_step(pi, {start, width, keep});

    auto sorted_in = v, sorted_out = std::vector<int>(out.values().begin(), out.values().end());
    std::sort(sorted_in.begin(), sorted_in.end());
    std::sort(sorted_out.begin(), sorted_out.end());
    CHECK(sorted_in == sorted_out);

    std::vector<int> first, second;
    for (int o = 1; o <= width; ++o) {
      const int value = pi(start + o - 1);
      (std::find(keep.begin(), keep.end(), o) != keep.end() ? first : second).push_back(value);
    }
    for (int p = 1; p <= n; ++p) {
      if (p < start || p >= start + width) {
        CHECK(out(p) == pi(p));
      } else {
        const int idx = p - start;
        const int expected = idx < static_cast<int>(first.size())
                                 ? first[static_cast<std::size_t>(idx)]
                                 : second[static_cast<std::size_t>(idx) - first.size()];
        CHECK(out(p) == expected);
      }
    }
  }
}

TEST_CASE("successors contain the input and grow with K") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> v(6);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const auto pi = Permutation::from_one_line(v);
    std::vector<Permutation> previous;
    for (int k = 1; k <= 6; ++k) {
      const auto succ = successors(pi, k);
      CHECK(std::binary_search(succ.begin(), succ.end(), pi));
      CHECK(std::includes(succ.begin(), succ.end(), previous.begin(), previous.end()));
      previous = succ;
    }
  }
}

TEST_CASE("successors match explicit step enumeration") {
  const auto pi = P("31524");
  for (int k = 1; k <= 5; ++k) {
    std::vector<Permutation> brute;
    for_each_step(5, k, [&](const DupLossStep& s) { brute.push_back(apply_step(pi, s)); });
    std::sort(brute.begin(), brute.end());
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    CHECK(successors(pi, k) == brute);
  }
}

TEST_CASE("inversions created") {
  CHECK(inversions_created(P("3142"), {1, 4, {1, 2, 3, 4}}) == 0);
  CHECK(inversions_created(Permutation::identity(4), {1, 4, {3, 4}}) == 4);
  CHECK(apply_step(Permutation::identity(4), {1, 4, {3, 4}}) == P("3412"));
  // Moving the larger elements right can also remove inversions.
  CHECK(inversions_created(P("21"), {1, 2, {2}}) == -1);
}

TEST_CASE("max inversions created on identity_K is floor(K^2/4)") {
  const std::int64_t expected[] = {0, 0, 1, 2, 4, 6, 9};
  for (int k = 2; k <= 6; ++k) {
    std::int64_t best = 0;
    for (unsigned mask = 0; mask < (1U << k); ++mask)
      best = std::max(best, inversions_created(Permutation::identity(k), {1, k, offsets_of_mask(k, mask)}));
    CHECK(best == expected[k]);
    CHECK(best == k * k / 4);
  }
}

TEST_CASE("no step of width k creates more than floor(k^2/4) inversions") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> v(7);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const auto pi = Permutation::from_one_line(v);
    for_each_step(7, 6, [&](const DupLossStep& s) { CHECK(inversions_created(pi, s) <= s.width * s.width / 4); });
  }
}
