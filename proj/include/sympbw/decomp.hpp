#pragma once

// Lattice points of fundamental polytopes and the peeling of a point of
// S(lambda) into a point of S(omega_i) plus a point of S(lambda - omega_i).

#include <optional>
#include <utility>
#include <vector>

#include "sympbw/polytope.hpp"

namespace sympbw {

/// Support of a point of S(omega_i): barred roots alpha_{j,kbar} and plain roots alpha_{t,r}.
struct FundamentalSupport {
  std::vector<std::pair<int, int>> barred;  // (j, k), both increasing, k <= n-1
  std::vector<std::pair<int, int>> plain;   // (t, r), t increasing and r decreasing

  [[nodiscard]] std::vector<PositiveRoot> roots(int rank) const;
  [[nodiscard]] MultiExponent exponent(int rank) const;
};

/// How "minimal elements of R_i^s" is read.
enum class MarkerOrder {
  /// beta <= gamma iff gamma is reachable from beta along a Dyck path
  /// (row and column position both weakly larger). Minimal elements form an antichain.
  path,
  /// The total variable order; the minimum is a single root.
  total,
};

struct MinimalMarker {
  std::vector<PositiveRoot> roots;  // sorted in reading order; empty if R_i^s is empty
  MultiExponent exponent;           // indicator vector of `roots`
};

/// All supports satisfying the chain conditions for omega_i, as 0/1 points.
std::vector<FundamentalSupport> fundamental_supports(int rank, int i);
std::vector<MultiExponent> fundamental_points(int rank, int i);

/// Roots beta with s_beta > 0 whose simple-root expansion contains alpha_i.
std::vector<PositiveRoot> support_R_i(const MultiExponent& s, int i);

MinimalMarker minimal_marker(const MultiExponent& s, int i, MarkerOrder order = MarkerOrder::path);

/// Splits s in S(lambda) as marker + remainder with i the smallest index where lambda
/// is nonzero. Throws InvalidArgument if s is not in S(lambda) or lambda = 0, and
/// std::logic_error if either piece falls outside its polytope.
std::pair<MinimalMarker, MultiExponent> peel(const DominantWeight& lambda, const MultiExponent& s,
                                             MarkerOrder order = MarkerOrder::path);

/// Repeated peeling down to zero: one fundamental point per unit of |lambda|,
/// paired with its fundamental index.
std::vector<std::pair<int, MultiExponent>> peel_completely(const DominantWeight& lambda, const MultiExponent& s,
                                                           MarkerOrder order = MarkerOrder::path);

/// sum_k |S(omega_{i-2k})| == C(2n, i), with S(omega_0) = {0}.
bool binomial_identity_check(int rank, int i);

}  // namespace sympbw
