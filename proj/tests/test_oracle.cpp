#include "doctest.h"

#include <functional>

#include "sympbw/grmod.hpp"
#include "sympbw/oracle.hpp"

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

GradedDimensionTable level_table(const RepresentationSpace& M) {
  GradedDimensionTable t;
  for (std::size_t b = 0; b < M.dim(); ++b) t.add(M.weight_tags()[b], M.level_tags()[b]);
  return t;
}

std::vector<std::uint64_t> cumulative(const GradedDimensionTable& t) {
  std::vector<std::uint64_t> out;
  std::uint64_t run = 0;
  for (const auto& [d, c] : t.degree_profile()) {
    while (static_cast<int>(out.size()) < d) out.push_back(run);
    run += c;
    out.push_back(run);
  }
  return out;
}

}  // namespace

TEST_CASE("module dimensions") {
  CHECK(build_module(W({1, 0})).dim() == 4);
  CHECK(build_module(W({0, 1})).dim() == 5);
  CHECK(build_module(W({1, 1})).dim() == 16);
  CHECK(build_module(W({0, 0})).dim() == 1);
  CHECK(build_module(W({1, 0})).ambient_dim() == 4);
  CHECK(build_module(W({0, 1})).ambient_dim() == 6);
  CHECK(cumulative(pbw_filtration_dims(W({0, 1}))) == std::vector<std::uint64_t>{1, 4, 5});
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : weights_up_to(n, 2)) {
      CAPTURE(lambda.coeffs);
      CHECK(Integer(static_cast<unsigned long>(build_module(lambda).dim())) == weyl_dim(lambda));
    }
  }
}

TEST_CASE("highest vector is annihilated by raising operators") {
  for (const auto& lambda : weights_up_to(3, 2)) {
    const RepresentationSpace M(lambda);
    for (std::size_t a = 0; a < 9; ++a) CHECK(M.apply_raising(a, M.highest_vector()).empty());
  }
}

TEST_CASE("ambient cap") {
  CHECK_THROWS_AS(RepresentationSpace(W({0, 0, 2}), 100), SizeLimitExceeded);
  CHECK_NOTHROW(RepresentationSpace(W({0, 0, 2}), 400));
}

TEST_CASE("filtration levels agree with ordered products and the polytope") {
  std::vector<DominantWeight> cases = weights_up_to(2, 3);
  for (int i = 1; i <= 3; ++i) cases.push_back(DominantWeight::fundamental(3, i));
  cases.push_back(W({1, 1, 0}));
  for (const auto& lambda : cases) {
    CAPTURE(lambda.coeffs);
    const auto M = build_module(lambda);
    const auto pbw = pbw_filtration_dims(M);
    CHECK(pbw == level_table(M));
    CHECK(pbw == pbw_filtration_dims(M, PbwOrder::ascending));
    CHECK(pbw == graded_character(lambda));
  }
}

TEST_CASE("graded action is commutative and kills the base relations") {
  for (const auto& lambda : weights_up_to(2, 2)) {
    CAPTURE(lambda.coeffs);
    const auto M = build_module(lambda);
    const auto G = graded_action(M);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        for (std::uint32_t j = 0; j < G.dim; ++j) {
          const std::map<std::uint32_t, Rational> e{{j, Rational(1)}};
          CHECK(G.apply(a, G.apply(b, e)) == G.apply(b, G.apply(a, e)));
        }
      }
    }
    for (const auto& rel : ideal_generators(lambda).base) {
      REQUIRE(rel.size() == 1);
      CHECK(G.monomial(rel.terms().begin()->first).empty());
    }
    Echelon span;
    const auto points = enumerate_points(lambda);
    for (const auto& s : points) span.insert(SparseVector::from_map(G.monomial(s)));
    CHECK(span.rank() == points.size());
    CHECK(span.rank() == G.dim);
  }
}

TEST_CASE("ordered monomials over the polytope form a basis") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : weights_up_to(n, n == 3 ? 1 : 3)) {
      CAPTURE(lambda.coeffs);
      const auto M = build_module(lambda);
      const auto points = enumerate_points(lambda);
      CHECK(ordered_monomial_rank(M, points) == M.dim());
      CHECK(ordered_monomial_rank(M, points, PbwOrder::ascending) == M.dim());
    }
  }
}

TEST_CASE("graded tensor products") {
  const auto w1 = DominantWeight::fundamental(2, 1);
  CHECK(tensor_cartan_dims(w1, w1).total() == 10);
  CHECK(tensor_cartan_dims(w1, w1) == pbw_filtration_dims(W({2, 0})));
  const auto w2 = DominantWeight::fundamental(2, 2);
  CHECK(tensor_cartan_dims(W({0, 0}), w2) == pbw_filtration_dims(w2));
  CHECK(tensor_cartan_dims(w1, w2) == pbw_filtration_dims(W({1, 1})));
  CHECK_THROWS_AS(tensor_cartan_dims(w1, DominantWeight::fundamental(3, 1)), InvalidArgument);
}
