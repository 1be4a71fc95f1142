#include "sympbw/decomp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sympbw {

std::vector<PositiveRoot> FundamentalSupport::roots(int rank) const {
  std::vector<PositiveRoot> out;
  for (auto [j, k] : barred) out.push_back(PositiveRoot{j, BarredIndex(k, true, rank)});
  for (auto [t, r] : plain) out.push_back(PositiveRoot{t, BarredIndex(r, false, rank)});
  return out;
}

MultiExponent FundamentalSupport::exponent(int rank) const {
  const auto& rs = root_system(rank);
  auto s = MultiExponent::zero(rank);
  for (const auto& r : roots(rank)) s[rs.index_of(r)] = 1;
  return s;
}

std::vector<FundamentalSupport> fundamental_supports(int rank, int i) {
  if (rank < 1 || i < 1 || i > rank) throw InvalidArgument("fundamental index out of range");
  std::vector<FundamentalSupport> out;
  FundamentalSupport cur;

  // plain chain: last_t < t_1 < ... <= i, n >= r_1 > r_2 > ... >= i
  std::function<void(int, int)> plain = [&](int last_t, int last_r) {
    out.push_back(cur);
    for (int t = last_t + 1; t <= i; ++t) {
      for (int r = i; r < last_r; ++r) {
        cur.plain.emplace_back(t, r);
        plain(t, r);
        cur.plain.pop_back();
      }
    }
  };
  // barred chain: j_1 < ... <= i, k_1 < ..., j <= k <= n-1
  std::function<void(int, int)> barred = [&](int last_j, int last_k) {
    plain(last_j, rank + 1);
    for (int j = last_j + 1; j <= i; ++j) {
      for (int k = std::max(j, last_k + 1); k <= rank - 1; ++k) {
        cur.barred.emplace_back(j, k);
        barred(j, k);
        cur.barred.pop_back();
      }
    }
  };
  barred(0, 0);
  return out;
}

std::vector<MultiExponent> fundamental_points(int rank, int i) {
  std::vector<MultiExponent> out;
  for (const auto& f : fundamental_supports(rank, i)) out.push_back(f.exponent(rank));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PositiveRoot> support_R_i(const MultiExponent& s, int i) {
  const int n = s.rank();
  if (i < 1 || i > n) throw InvalidArgument("fundamental index out of range");
  const auto& rs = root_system(n);
  std::vector<PositiveRoot> out;
  for (std::size_t b = 0; b < rs.size(); ++b) {
    if (s[b] > 0 && rs.expansion(b)[i - 1] != 0) out.push_back(rs.root(b));
  }
  return out;
}

MinimalMarker minimal_marker(const MultiExponent& s, int i, MarkerOrder order) {
  const int n = s.rank();
  const auto& rs = root_system(n);
  auto support = support_R_i(s, i);
  MinimalMarker m{{}, MultiExponent::zero(n)};
  if (support.empty()) return m;

  if (order == MarkerOrder::total) {
    // reading order is increasing in the variable order
    m.roots.push_back(support.front());
  } else {
    auto below = [&](const PositiveRoot& a, const PositiveRoot& b) {
      return a.row <= b.row && a.col <= b.col && !(a == b);
    };
    for (const auto& b : support) {
      bool minimal = std::none_of(support.begin(), support.end(), [&](const PositiveRoot& a) { return below(a, b); });
      if (minimal) m.roots.push_back(b);
    }
  }
  for (const auto& r : m.roots) m.exponent[rs.index_of(r)] = 1;
  return m;
}

std::pair<MinimalMarker, MultiExponent> peel(const DominantWeight& lambda, const MultiExponent& s, MarkerOrder order) {
  const int i = lambda.minimal_support();
  if (i == 0) throw InvalidArgument("cannot peel the zero weight");
  if (!contains(lambda, s)) throw InvalidArgument("point is not in S(lambda)");

  auto marker = minimal_marker(s, i, order);
  auto rest = s - marker.exponent;
  std::vector<int> m(lambda.coeffs);
  --m[i - 1];
  DominantWeight smaller(m);
  if (!contains(DominantWeight::fundamental(lambda.rank(), i), marker.exponent)) {
    throw std::logic_error("minimal marker is not in the fundamental polytope");
  }
  if (!contains(smaller, rest)) throw std::logic_error("peeled remainder is not in S(lambda - omega_i)");
  return {std::move(marker), std::move(rest)};
}

std::vector<std::pair<int, MultiExponent>> peel_completely(const DominantWeight& lambda, const MultiExponent& s,
                                                           MarkerOrder order) {
  std::vector<std::pair<int, MultiExponent>> parts;
  DominantWeight cur = lambda;
  MultiExponent rest = s;
  while (cur.minimal_support() != 0) {
    const int i = cur.minimal_support();
    auto [marker, next] = peel(cur, rest, order);
    parts.emplace_back(i, std::move(marker.exponent));
    rest = std::move(next);
    std::vector<int> m(cur.coeffs);
    --m[i - 1];
    cur = DominantWeight(m);
  }
  if (!rest.is_zero()) throw std::logic_error("peeling did not terminate at zero");
  return parts;
}

bool binomial_identity_check(int rank, int i) {
  if (rank < 1 || i < 1 || i > rank) throw InvalidArgument("fundamental index out of range");
  Integer total = 0;
  for (int k = i; k >= 0; k -= 2) {
    if (k == 0) {
      total += 1;
    } else {
      total += static_cast<unsigned long>(Polytope(DominantWeight::fundamental(rank, k)).count());
    }
  }
  return total == binomial(2 * rank, i);
}

}  // namespace sympbw
