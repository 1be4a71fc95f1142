#include "doctest.h"

#include "sympbw/rootsys.hpp"

using namespace sympbw;

namespace {

PositiveRoot root(int n, int row, int col, bool barred = false) {
  return PositiveRoot{row, BarredIndex(col, barred, n)};
}

}  // namespace

TEST_CASE("alphabet order and successor") {
  const int n = 4;
  std::vector<BarredIndex> j;
  for (int p = 0; p <= 2 * n - 2; ++p) j.push_back(BarredIndex::from_position(p, n));
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b) {
      CHECK((j[a] < j[b]) == (a < b));
      CHECK((j[a] == j[b]) == (a == b));
    }
  CHECK(BarredIndex(4, true, 4) == BarredIndex(4, false, 4));
  CHECK(j[3].successor(n)->label() == "3bar");
  CHECK_FALSE(BarredIndex(1, true, n).successor(n).has_value());
  for (std::size_t a = 0; a + 1 < j.size(); ++a) CHECK(*j[a].successor(n) == j[a + 1]);
}

TEST_CASE("positive roots in triangle reading order") {
  auto r2 = positive_roots(2);
  REQUIRE(r2.size() == 4);
  CHECK(r2[0] == root(2, 1, 1));
  CHECK(r2[1] == root(2, 1, 2));
  CHECK(r2[2] == root(2, 1, 1, true));
  CHECK(r2[3] == root(2, 2, 2));

  auto r1 = positive_roots(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == root(1, 1, 1));

  auto r4 = positive_roots(4);
  CHECK(r4.size() == 16);
  std::vector<int> row_len(4, 0);
  for (const auto& r : r4) ++row_len[r.row - 1];
  CHECK(row_len == std::vector<int>{7, 5, 3, 1});

  CHECK_THROWS_AS(positive_roots(0), InvalidArgument);

  for (int n = 1; n <= 6; ++n) {
    auto roots = positive_roots(n);
    CHECK(roots.size() == static_cast<std::size_t>(n * n));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (roots[i].row == roots[i + 1].row) CHECK(roots[i].col < roots[i + 1].col);
    }
  }
}

TEST_CASE("root expansions") {
  const auto& rs = root_system(2);
  CHECK(rs.expansion(rs.index_of(root(2, 1, 1, true))) == std::vector<int>{2, 1});
  CHECK(rs.expansion(rs.index_of(root(2, 1, 2))) == std::vector<int>{1, 1});
  const auto& rs4 = root_system(4);
  CHECK(rs4.expansion(rs4.index_of(root(4, 1, 1, true))) == std::vector<int>{2, 2, 2, 1});
  CHECK(rs4.expansion(rs4.index_of(root(4, 2, 3, true))) == std::vector<int>{0, 1, 2, 1});
}

TEST_CASE("root successors") {
  const auto& rs4 = root_system(4);
  auto s = root_successors(rs4, root(4, 2, 3, true));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == root(4, 2, 2, true));
  CHECK(s[1] == root(4, 3, 3, true));

  const auto& rs2 = root_system(2);
  auto t = root_successors(rs2, root(2, 1, 2));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == root(2, 1, 1, true));
  CHECK(t[1] == root(2, 2, 2));
  CHECK(root_successors(rs2, root(2, 2, 2)).empty());
}

TEST_CASE("path bounds") {
  DominantWeight l11({1, 1});
  CHECK(path_bound(l11, root(2, 1, 1), root(2, 2, 2)) == 2);
  CHECK(path_bound(l11, root(2, 1, 1), root(2, 1, 1, true)) == 2);
  CHECK(path_bound(l11, root(2, 1, 1), root(2, 1, 1)) == 1);
  CHECK(path_bound(l11, root(2, 2, 2), root(2, 2, 2)) == 1);
  CHECK_THROWS_AS(path_bound(l11, root(2, 1, 2), root(2, 2, 2)), InvalidArgument);
  CHECK_THROWS_AS(path_bound(l11, root(2, 1, 1), root(2, 1, 2)), InvalidArgument);
  CHECK_THROWS_AS(path_bound(l11, root(2, 2, 2), root(2, 1, 1, true)), InvalidArgument);

  for (int n = 1; n <= 4; ++n) {
    const auto& rs = root_system(n);
    auto zero = DominantWeight::zero(n);
    for (int i = 1; i <= n; ++i)
      for (std::size_t e = 0; e < rs.size(); ++e)
        if ((rs.is_simple(e) || rs.is_long_end(e)) && rs.row_of(e) >= i)
          CHECK(path_bound(zero, rs, rs.simple(i), e) == 0);
  }
  CHECK_THROWS_AS(DominantWeight({}), InvalidArgument);
  CHECK_THROWS_AS(DominantWeight({1, -1}), InvalidArgument);
}

TEST_CASE("chevalley realization satisfies sp relations") {
  for (int n = 1; n <= 5; ++n) {
    const auto& cr = chevalley_realization(n);
    const auto& rs = cr.roots();
    auto a = cartan_matrix(n);
    for (int k = 1; k <= n; ++k) {
      CHECK(cr.in_algebra(cr.e(k)));
      CHECK(cr.in_algebra(cr.f(k)));
      CHECK(cr.in_algebra(cr.h(k)));
      CHECK(bracket(cr.h(k), cr.e(k)) == cr.e(k) * 2);
      CHECK(bracket(cr.h(k), cr.f(k)) == cr.f(k) * -2);
      CHECK(bracket(cr.e(k), cr.f(k)) == cr.h(k));
      for (int l = 1; l <= n; ++l) {
        CHECK(bracket(cr.h(k), cr.f(l)) == cr.f(l) * -a[k - 1][l - 1]);
      }
    }
    // Root vectors live in the right weight spaces of the diagonal Cartan.
    for (std::size_t b = 0; b < rs.size(); ++b) {
      CHECK(cr.in_algebra(cr.lowering(b)));
      CHECK_FALSE(cr.lowering(b).is_zero());
      CHECK_FALSE(cr.raising(b).is_zero());
      for (int t = 0; t < n; ++t) {
        std::vector<long long> diag(n, 0);
        diag[t] = 1;
        auto hh = cr.cartan(diag);
        // alpha_k(eps_t-direction): alpha_k = eps_k - eps_{k+1}, alpha_n = 2 eps_n
        long long value = 0;
        const auto& c = rs.expansion(b);
        for (int k = 0; k < n; ++k) {
          long long ak = 0;
          if (k < n - 1) ak = (t == k) - (t == k + 1);
          else ak = 2 * (t == n - 1);
          value += c[k] * ak;
        }
        CHECK(bracket(hh, cr.lowering(b)) == cr.lowering(b) * -value);
        CHECK(bracket(hh, cr.raising(b)) == cr.raising(b) * value);
      }
    }
    // ad_coeff nonzero exactly when beta - alpha_k is a positive root.
    for (int k = 1; k <= n; ++k)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        const bool is_root = rs.difference(b, rs.simple(k)).has_value();
        CHECK((cr.ad_coeff(k, b) != 0) == is_root);
      }
  }
}

TEST_CASE("chevalley small cases") {
  const auto& c1 = chevalley_realization(1);
  CHECK(c1.e(1)(0, 1) == 1);
  CHECK(c1.f(1)(1, 0) == 1);
  CHECK(bracket(c1.e(1), c1.f(1)) == c1.h(1));

  const auto& c2 = chevalley_realization(2);
  const auto& rs = c2.roots();
  auto f12 = rs.index_of(root(2, 1, 2));
  auto f22 = rs.index_of(root(2, 2, 2));
  auto f11 = rs.index_of(root(2, 1, 1));
  auto lhs = bracket(c2.e(1), c2.lowering(f12));
  auto c = proportionality(lhs, c2.lowering(f22));
  REQUIRE(c.has_value());
  CHECK(*c != 0);
  CHECK(c2.ad_coeff(1, f12) != 0);
  CHECK(bracket(c2.e(2), c2.lowering(f11)).is_zero());
  CHECK(c2.ad_coeff(2, f11) == 0);
}
