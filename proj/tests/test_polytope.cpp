#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "sympbw/polytope.hpp"

using namespace sympbw;

namespace {

DominantWeight W(std::vector<int> m) { return DominantWeight(std::move(m)); }

std::vector<DominantWeight> weights_up_to(int n, int total) {
  std::vector<DominantWeight> out;
  std::vector<int> m(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      out.push_back(W(m));
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

// Bound for a path from alpha_i to its end, recomputed from the end root alone.
int direct_bound(const DominantWeight& lam, const RootSystem& rs, const DyckPath& p) {
  const int i = p.start_row();
  const auto& end = rs.root(p.indices.back());
  const int n = lam.rank();
  const int j = rs.is_simple(p.indices.back()) && end.col.value() < n ? end.col.value() : n;
  int b = 0;
  for (int k = i; k <= j; ++k) b += lam.coeffs[k - 1];
  return b;
}

// Every vector in the box [0, |lambda|]^{n^2} tested against every path sum.
std::vector<MultiExponent> brute_force_points(const DominantWeight& lam) {
  const int n = lam.rank();
  const auto& rs = root_system(n);
  const auto paths = enumerate_paths(n);
  int cap = 0;
  for (int m : lam.coeffs) cap += m;
  std::vector<MultiExponent> out;
  std::vector<int> v(rs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == v.size()) {
      for (const auto& p : paths) {
        int sum = 0;
        for (auto idx : p.indices) sum += v[idx];
        if (sum > direct_bound(lam, rs, p)) return;
      }
      out.emplace_back(v);
      return;
    }
    for (int x = 0; x <= cap; ++x) {
      v[c] = x;
      rec(c + 1);
    }
    v[c] = 0;
  };
  rec(0);
  return out;
}

WeightInRootLattice WL(std::vector<int> c) { return WeightInRootLattice{std::move(c)}; }

}  // namespace

TEST_CASE("multi-exponent basics") {
  CHECK_THROWS_AS(MultiExponent(std::vector<int>{1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(MultiExponent(std::vector<int>{0, -1, 0, 0}), InvalidArgument);
  auto s = MultiExponent(std::vector<int>{1, 0, 2, 3});
  CHECK(s.rank() == 2);
  CHECK(s.degree() == 6);
  const auto& rs = root_system(2);
  CHECK(s.at(rs, PositiveRoot{1, BarredIndex(1, true, 2)}) == 2);
  CHECK(row_total(rs, s, 1) == 3);
  CHECK(row_total(rs, s, 2) == 3);
  CHECK(column_total(rs, s, 1) == 3);  // a(1,2) and a(2,2) share position 1
  CHECK_THROWS_AS(MultiExponent::unit(2, 0) - MultiExponent::unit(2, 1), InvalidArgument);
  CHECK((s - MultiExponent::unit(2, 0)).degree() == 5);
}

TEST_CASE("inequality bounds") {
  auto ineq = inequalities(W({1, 1}));
  REQUIRE(ineq.size() == 4);
  std::vector<int> bounds;
  for (const auto& q : ineq) bounds.push_back(q.bound);
  // path order (a11), (a11,a12,a1,1bar), (a11,a12,a22), (a22)
  CHECK(bounds == std::vector<int>{1, 2, 2, 1});

  for (const auto& q : inequalities(W({0, 0}))) CHECK(q.bound == 0);

  auto one = inequalities(W({3}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].bound == 3);

  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : weights_up_to(n, 2)) {
      const auto& rs = root_system(n);
      for (const auto& q : inequalities(lam)) CHECK(q.bound == direct_bound(lam, rs, q.path));
    }
  }
}

TEST_CASE("membership examples") {
  auto lam = W({1, 0});
  CHECK_FALSE(contains(lam, MultiExponent(std::vector<int>{1, 1, 0, 0})));
  CHECK(contains(lam, MultiExponent(std::vector<int>{0, 1, 0, 0})));
  CHECK(contains(W({0, 0, 0}), MultiExponent::zero(3)));
  CHECK_THROWS_AS(contains(lam, MultiExponent::zero(3)), InvalidArgument);

  Polytope p(lam);
  CHECK(p.first_violation(MultiExponent(std::vector<int>{1, 1, 0, 0})) == 1u);
}

TEST_CASE("point enumeration examples") {
  auto pts = enumerate_points(W({1, 0}));
  std::vector<MultiExponent> expected{MultiExponent::zero(2), MultiExponent::unit(2, 2),
                                      MultiExponent::unit(2, 1), MultiExponent::unit(2, 0)};
  CHECK(pts == expected);
  CHECK(enumerate_points(W({0, 1})).size() == 5);
  CHECK(enumerate_points(W({1, 1})).size() == 16);
  CHECK(enumerate_points(W({0, 0, 0, 0})).size() == 1);
}

TEST_CASE("enumeration agrees with brute force") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& lam : weights_up_to(n, 3)) {
      auto fast = enumerate_points(lam);
      auto slow = brute_force_points(lam);
      CHECK(std::is_sorted(fast.begin(), fast.end()));
      CHECK(fast == slow);
    }
  }
  for (const auto& lam : weights_up_to(3, 1)) CHECK(enumerate_points(lam) == brute_force_points(lam));
}

TEST_CASE("weights and degrees") {
  const auto& rs = root_system(2);
  CHECK(weight_of(rs, MultiExponent::unit(2, 2)) == WL({2, 1}));
  CHECK(degree_of(MultiExponent::unit(2, 2)) == 1);
  CHECK(weight_of(rs, MultiExponent::zero(2)) == WL({0, 0}));
  CHECK(degree_of(MultiExponent::zero(2)) == 0);
  auto s = MultiExponent::unit(2, 1) + MultiExponent::unit(2, 3);
  CHECK(weight_of(rs, s) == WL({1, 2}));
  CHECK(degree_of(s) == 2);
}

TEST_CASE("character examples") {
  auto ch = character(W({1, 0}));
  CHECK(ch == Character{{WL({0, 0}), 1}, {WL({1, 0}), 1}, {WL({1, 1}), 1}, {WL({2, 1}), 1}});
  auto g = graded_character(W({1, 0}));
  CHECK(g.degree_profile() == std::map<int, std::uint64_t>{{0, 1}, {1, 3}});

  auto zero = graded_character(W({0, 0}));
  CHECK(zero.entries().size() == 1);
  CHECK(zero.at(WL({0, 0}), 0) == 1);

  auto g2 = graded_character(W({0, 1}));
  CHECK(g2.at(WL({1, 1}), 1) == 1);
  std::uint64_t other = 0;
  for (const auto& [k, v] : g2.entries())
    if (k.first == WL({1, 1}) && k.second != 1) other += v;
  CHECK(other == 0);
  CHECK(g2.degree_profile() == std::map<int, std::uint64_t>{{0, 1}, {1, 3}, {2, 1}});
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim(W({1, 0})) == 4);
  CHECK(weyl_dim(W({1, 1})) == 16);
  CHECK(weyl_dim(W({0, 0, 0})) == 1);
  CHECK(weyl_dim(W({0, 1})) == 5);
  CHECK(weyl_dim(W({2, 0})) == 10);
  CHECK(weyl_dim(W({0, 3})) == 30);
  CHECK(weyl_dim(W({1, 1, 0})) == 64);
  CHECK(weyl_dim(W({0, 0, 3})) == 330);
  // fundamentals: C(2n,k) - C(2n,k-2)
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      Integer expect = binomial(2 * n, k) - (k >= 2 ? binomial(2 * n, k - 2) : Integer(0));
      CHECK(weyl_dim(DominantWeight::fundamental(n, k)) == expect);
    }
  }
}

TEST_CASE("Freudenthal multiplicities") {
  CHECK(freudenthal_multiplicities(W({1, 0})) ==
        Character{{WL({0, 0}), 1}, {WL({1, 0}), 1}, {WL({1, 1}), 1}, {WL({2, 1}), 1}});
  CHECK(freudenthal_multiplicities(W({0, 0})) == Character{{WL({0, 0}), 1}});
  auto adj = freudenthal_multiplicities(W({2, 0}));
  CHECK(adj.at(WL({2, 1})) == 2);  // zero weight: 2 omega_1 = 2 alpha_1 + alpha_2
  std::uint64_t total = 0;
  for (const auto& [w, m] : adj) total += m;
  CHECK(total == 10);
}

TEST_CASE("dimension and character identities") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : weights_up_to(n, n == 3 ? 2 : 3)) {
      auto ch = character(lam);
      auto fr = freudenthal_multiplicities(lam);
      CHECK(ch == fr);
      std::uint64_t total = 0;
      for (const auto& [w, m] : fr) total += m;
      CHECK(Integer(static_cast<unsigned long>(total)) == weyl_dim(lam));
      CHECK(graded_character(lam).multiplicities() == ch);
    }
  }
}

TEST_CASE("dilation counts") {
  std::vector<DominantWeight> base{W({1, 0}), W({0, 1}), W({1, 1}), W({1, 0, 0}), W({0, 1, 0}), W({0, 0, 1})};
  for (const auto& lam : base) {
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> m(lam.coeffs);
      for (auto& x : m) x *= k;
      auto kl = W(m);
      CHECK(Integer(static_cast<unsigned long>(Polytope(kl).count())) == weyl_dim(kl));
    }
  }
}

TEST_CASE("membership is additive in the weight") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 3; ++n) {
    auto ws = weights_up_to(n, 2);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& a = ws[rng() % ws.size()];
      const auto& b = ws[rng() % ws.size()];
      auto pa = enumerate_points(a);
      auto pb = enumerate_points(b);
      Polytope sum(a + b);
      for (int t = 0; t < 20; ++t) {
        const auto& s = pa[rng() % pa.size()];
        const auto& u = pb[rng() % pb.size()];
        CHECK(sum.contains(s + u));
      }
    }
  }
}

TEST_CASE("redundancy report keeps the full inequality list") {
  for (int n = 1; n <= 4; ++n) {
    Polytope p(DominantWeight::fundamental(n, 1));
    CHECK(p.inequalities().size() == enumerate_paths(n).size());
    CHECK(p.redundant().size() < p.inequalities().size());
    // a redundant inequality is implied, so dropping it never changes membership
    for (const auto& s : p.points()) CHECK(p.contains(s));
  }
}
