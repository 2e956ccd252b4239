#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "duploss/error.hpp"
#include "duploss/experiments.hpp"
#include "duploss/scenarios.hpp"

using namespace duploss;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

template <class F>
void for_each_perm(int n, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Permutation::unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

Permutation apply_all(Permutation pi, const std::vector<DupLossStep>& steps) {
  for (const auto& s : steps) pi = apply_step(pi, s);
  return pi;
}

SubWindowTarget window_target(IndexRange range, std::vector<int> target) {
  std::vector<int> current = target;
  std::sort(current.begin(), current.end());
  return {range, current, target};
}

}  // namespace

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(1024) == 10);
}

TEST_CASE("WidthLimit parsing") {
  CHECK(WidthLimit::parse("inf").is_infinite());
  CHECK(WidthLimit::parse("7").value() == 7);
  CHECK(WidthLimit::parse("inf").resolve(9) == 9);
  CHECK_THROWS_AS(WidthLimit::parse("7x"), Error);
  CHECK_THROWS_AS(WidthLimit::parse("0"), Error);
  CHECK_THROWS_AS(WidthLimit::infinite().value(), Error);
}

TEST_CASE("radix scenario") {
  SUBCASE("identity target needs no steps") {
    CHECK(radix_scenario(Permutation::identity(6)).step_count() == 0);
  }
  SUBCASE("3142 takes two steps") {
    const auto sc = radix_scenario(P("3142"));
    CHECK(sc.step_count() == 2);
    CHECK(replay(sc) == P("3142"));
    for (const auto& s : sc.steps) CHECK(s.width == 4);
  }
  SUBCASE("one descent takes one step") {
    for (const char* t : {"21", "2314", "13425", "561234"}) {
      const auto sc = radix_scenario(P(t));
      CHECK(sc.step_count() == 1);
      CHECK(replay(sc) == P(t));
    }
  }
  SUBCASE("sub-window leaves the outside alone") {
    // window 3..6 of a size-8 permutation currently holds 2,5,6,7
    const SubWindowTarget t{{3, 6}, {2, 5, 6, 7}, {6, 2, 7, 5}};
    const auto sc = radix_scenario(t, 8);
    const auto start = P("13256748");
    const auto out = apply_all(start, sc.steps);
    CHECK(out == P("13627548"));
    CHECK(sc.step_count() == static_cast<std::size_t>(ceil_log2(3)));
    for (const auto& s : sc.steps) {
      CHECK(s.start == 3);
      CHECK(s.width == 4);
    }
  }
  SUBCASE("precondition failures") {
    CHECK_THROWS_AS(radix_scenario({{1, 3}, {2, 1, 3}, {1, 2, 3}}, 3), Error);
    CHECK_THROWS_AS(radix_scenario({{1, 3}, {1, 2, 3}, {1, 2, 4}}, 4), Error);
    try {
      radix_scenario({{1, 2}, {2, 1}, {1, 2}}, 2);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSortedWindow);
    }
  }
}

TEST_CASE("radix scenario is exact on all of S_n, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for_each_perm(n, [&](const Permutation& s) {
      const auto sc = radix_scenario(s);
      CHECK(replay(sc) == s);
      CHECK(static_cast<int>(sc.step_count()) == (n == 0 ? 0 : ceil_log2(descent_count(s) + 1)));
    });
  }
}

TEST_CASE("bucket windows follow the right-anchored layout") {
  CHECK(bucket_windows(10, 6) == std::vector<IndexRange>{{8, 10}, {5, 7}, {1, 4}});
  CHECK(bucket_windows(4, 4) == std::vector<IndexRange>{{1, 4}});
  CHECK(bucket_windows(9, 2) ==
        std::vector<IndexRange>{{9, 9}, {8, 8}, {7, 7}, {6, 6}, {5, 5}, {4, 4}, {3, 3}, {1, 2}});
  for (int n = 1; n <= 60; ++n) {
    for (int k = 2; k <= 12; ++k) {
      const auto w = bucket_windows(n, k);
      CHECK(w.back().first == 1);
      CHECK(w.back().width() <= k);
      CHECK(w.front().last == n);
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        CHECK(w[i].width() == k / 2);
        CHECK(w[i + 1].last + 1 == w[i].first);
      }
    }
  }
  CHECK_THROWS_AS(bucket_windows(5, 1), Error);
}

TEST_CASE("bucket scenario worked example") {
  const auto sigma = Permutation::from_one_line({2, 10, 1, 7, 6, 5, 8, 9, 3, 4});
  const auto trace = bucket_trace(sigma, 6);
  CHECK(trace.after_phase1 == Permutation::from_one_line({1, 2, 7, 10, 5, 6, 8, 3, 4, 9}));
  CHECK(replay(trace.scenario) == sigma);
  for (const auto& s : trace.scenario.steps) CHECK(s.width <= 6);
}

TEST_CASE("bucket scenario edge cases") {
  CHECK(bucket_scenario(Permutation::identity(30), 4).step_count() == 0);
  CHECK(bucket_scenario(Permutation::identity(1), 2).step_count() == 0);
  CHECK(bucket_scenario(Permutation{}, 2).step_count() == 0);

  const auto reversed4 = bucket_trace(P("4321"), 4);
  CHECK(reversed4.phase1_steps == 0);
  CHECK(reversed4.scenario.step_count() == 2);
  CHECK(replay(reversed4.scenario) == P("4321"));

  try {
    bucket_scenario(P("21"), 1);
    FAIL("expected InvalidK");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidK);
  }
}

TEST_CASE("bucket scenario round-trips exhaustively for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 2; k <= 7; ++k) {
      for_each_perm(n, [&](const Permutation& s) {
        const auto trace = bucket_trace(s, k);
        CHECK(replay(trace.scenario) == s);
        for (const auto& step : trace.scenario.steps) CHECK(step.width <= k);
        // Every window holds exactly sigma's values, increasing, after phase 1.
        for (const auto& w : bucket_windows(n, k)) {
          std::vector<int> got, want;
          for (int p = w.first; p <= w.last; ++p) {
            got.push_back(trace.after_phase1(p));
            want.push_back(s(p));
          }
          std::sort(want.begin(), want.end());
          CHECK(got == want);
        }
      });
    }
  }
}

TEST_CASE("bucket scenario round-trips on random inputs up to n = 512") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 512);
    const int k = 2 + static_cast<int>(rng() % 15);
    const auto sigma = random_permutation(n, rng());
    const auto sc = bucket_scenario(sigma, k);
    REQUIRE(replay(sc) == sigma);
    for (const auto& step : sc.steps) REQUIRE(step.width <= k);
  }
}

TEST_CASE("bucket replay for n = 50, K = 7") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sigma = random_permutation(50, seed);
    CHECK(replay(bucket_scenario(sigma, 7)) == sigma);
  }
}

TEST_CASE("phase-1 convoy") {
  SUBCASE("members already in place") {
    CHECK(phase1_move_block(Permutation::identity(6), {5, 6}, {5, 6}, 4).empty());
  }
  SUBCASE("single member next to its target") {
    const auto steps = phase1_move_block(Permutation::identity(4), {3}, {4, 4}, 2);
    CHECK(steps.size() == 1);
    CHECK(apply_all(Permutation::identity(4), steps) == P("1243"));
  }
  SUBCASE("members at the far left travel the whole way") {
    for (int k = 2; k <= 10; ++k) {
      for (int n = k + 1; n <= 80; n += 7) {
        const int half = k / 2;
        std::set<int> members;
        for (int v = 1; v <= half; ++v) members.insert(v);
        const IndexRange target{n - half + 1, n};
        const auto pi = Permutation::identity(n);
        const auto steps = phase1_move_block(pi, members, target, k);
        const int up = (k + 1) / 2;
        CHECK(static_cast<int>(steps.size()) <= (n - half + up - 1) / up + 1);
        CHECK(static_cast<int>(steps.size()) <= (n + up - 1) / up + 1);
        const auto out = apply_all(pi, steps);
        for (int i = 0; i < half; ++i) CHECK(out(target.first + i) == i + 1);
        // Non-members keep their relative order.
        for (int p = 1; p < target.first - 1; ++p) CHECK(out(p) < out(p + 1));
        for (const auto& s : steps) CHECK(s.width <= k);
      }
    }
  }
  SUBCASE("scattered members keep their relative order") {
    const auto pi = P("7,1,9,2,8,3,4,5,6,10,11,12");
    const std::set<int> members{9, 8, 5};
    const auto steps = phase1_move_block(pi, members, {10, 12}, 6);
    const auto out = apply_all(pi, steps);
    CHECK(out == P("7,1,2,3,4,6,10,11,12,9,8,5"));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(phase1_move_block(Permutation::identity(8), {1, 2, 3}, {6, 8}, 4), Error);
    try {
      phase1_move_block(Permutation::identity(8), {1, 2, 3}, {6, 8}, 5);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TooManyMembers);
    }
    CHECK_THROWS_AS(phase1_move_block(Permutation::identity(8), {1, 2}, {6, 8}, 4), Error);
    CHECK_THROWS_AS(phase1_move_block(Permutation::identity(8), {8}, {1, 1}, 4), std::logic_error);
  }
}

TEST_CASE("replay validation") {
  CHECK(replay(Scenario{5, WidthLimit(3), {}}) == Permutation::identity(5));
  CHECK(replay(Scenario{7, WidthLimit(4), {{3, 4, {2, 3}}}}) == P("1245367"));
  try {
    replay(Scenario{7, WidthLimit(3), {{3, 4, {2, 3}}}});
    FAIL("expected WidthExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WidthExceeded);
  }
  try {
    replay(Scenario{5, WidthLimit(4), {{3, 4, {2, 3}}}});
    FAIL("expected WindowOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowOutOfRange);
  }
}

TEST_CASE("reversed-identity bucket steps scale like n^2/K^2") {
  const int k = 8;
  double lo = 1e9, hi = 0;
  for (int n : {64, 128, 256, 512, 1024}) {
    const double ratio = static_cast<double>(bucket_scenario(Permutation::reversed(n), k).step_count()) * k * k /
                         (static_cast<double>(n) * n);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo > 0.5);
  CHECK(hi / lo <= 2.5);
}
