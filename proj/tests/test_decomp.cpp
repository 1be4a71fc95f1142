#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "sympbw/decomp.hpp"

using namespace sympbw;

namespace {

MultiExponent S(std::vector<int> v) { return MultiExponent(std::move(v)); }

PositiveRoot R(int n, int row, int col, bool barred = false) { return PositiveRoot{row, BarredIndex(col, barred, n)}; }

std::vector<DominantWeight> weights_up_to(int n, int total) {
  std::vector<DominantWeight> out;
  std::vector<int> m(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      out.emplace_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[k] = v;
      rec(k + 1, left - v);
    }
    m[k] = 0;
  };
  rec(0, total);
  return out;
}

}  // namespace

TEST_CASE("fundamental points match the polytope") {
  CHECK(fundamental_points(2, 1).size() == 4);
  CHECK(fundamental_points(2, 2).size() == 5);
  CHECK(fundamental_points(1, 1) == std::vector<MultiExponent>{S({0}), S({1})});
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto fp = fundamental_points(n, i);
      CHECK(fp == enumerate_points(DominantWeight::fundamental(n, i)));
      std::set<MultiExponent> unique(fp.begin(), fp.end());
      CHECK(unique.size() == fp.size());
    }
  }
  CHECK_THROWS_AS(fundamental_points(3, 4), InvalidArgument);
  CHECK_THROWS_AS(fundamental_points(3, 0), InvalidArgument);
}

TEST_CASE("fundamental supports meet each path at most once") {
  for (int n = 1; n <= 4; ++n) {
    const auto& rs = root_system(n);
    auto paths = enumerate_paths(n);
    for (int i = 1; i <= n; ++i) {
      for (const auto& f : fundamental_supports(n, i)) {
        auto roots = f.roots(n);
        CHECK(static_cast<int>(roots.size()) <= i);
        for (const auto& p : paths) {
          int hits = 0;
          for (const auto& r : roots) hits += p.contains(rs.index_of(r)) ? 1 : 0;
          CHECK(hits <= 1);
        }
      }
    }
  }
}

TEST_CASE("support of R_i") {
  CHECK(support_R_i(S({1, 0, 0, 1}), 1) == std::vector<PositiveRoot>{R(2, 1, 1)});
  CHECK(support_R_i(S({0, 1, 1, 0}), 1) == std::vector<PositiveRoot>{R(2, 1, 2), R(2, 1, 1, true)});
  CHECK(support_R_i(S({0, 0, 0, 0}), 2).empty());
}

TEST_CASE("peel examples") {
  auto lam = DominantWeight(std::vector<int>{1, 1});
  {
    auto [m, rest] = peel(lam, S({1, 0, 0, 1}));
    CHECK(m.roots == std::vector<PositiveRoot>{R(2, 1, 1)});
    CHECK(rest == S({0, 0, 0, 1}));
  }
  {
    auto [m, rest] = peel(lam, S({0, 1, 1, 0}));
    CHECK(m.roots == std::vector<PositiveRoot>{R(2, 1, 2)});
    CHECK(rest == S({0, 0, 1, 0}));
  }
  {
    auto [m, rest] = peel(lam, S({0, 0, 0, 0}));
    CHECK(m.roots.empty());
    CHECK(m.exponent.is_zero());
    CHECK(rest.is_zero());
  }
  CHECK_THROWS_AS(peel(DominantWeight::zero(2), S({0, 0, 0, 0})), InvalidArgument);
  CHECK_THROWS_AS(peel(lam, S({2, 0, 0, 0})), InvalidArgument);
}

TEST_CASE("a single minimum in the total order does not always peel") {
  // s = e_{1,1bar} + e_{2,2} lies in S(omega_2); its two roots are incomparable along paths.
  auto lam = DominantWeight::fundamental(2, 2);
  auto s = S({0, 0, 1, 1});
  REQUIRE(contains(lam, s));
  CHECK_THROWS_AS(peel(lam, s, MarkerOrder::total), std::logic_error);
  auto [m, rest] = peel(lam, s);
  CHECK(m.roots.size() == 2);
  CHECK(rest.is_zero());
}

TEST_CASE("iterated peeling over small weights") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : weights_up_to(n, 3)) {
      int size = 0;
      for (int m : lam.coeffs) size += m;
      for (const auto& s : enumerate_points(lam)) {
        auto parts = peel_completely(lam, s);
        CHECK(static_cast<int>(parts.size()) == size);
        MultiExponent sum = MultiExponent::zero(n);
        for (const auto& [i, p] : parts) {
          CHECK(contains(DominantWeight::fundamental(n, i), p));
          sum = sum + p;
        }
        CHECK(sum == s);
      }
    }
  }
}

TEST_CASE("binomial identity") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) CHECK(binomial_identity_check(n, i));
}
