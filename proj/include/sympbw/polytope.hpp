#pragma once

// The polytope cut out by one inequality per Dyck path, its lattice points,
// their weights and degrees, and the (graded) characters built from them.
// Also home to the two classical oracles: Weyl's dimension formula and
// Freudenthal's multiplicity recursion.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sympbw/dyck.hpp"
#include "sympbw/exact.hpp"
#include "sympbw/rootsys.hpp"

namespace sympbw {

/// A point of Z_{>=0}^{n^2}, one coordinate per positive root in reading order.
class MultiExponent {
 public:
  MultiExponent() = default;
  explicit MultiExponent(std::vector<int> coords);
  static MultiExponent zero(int rank);
  static MultiExponent unit(int rank, std::size_t root_index);

  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] int rank() const;
  [[nodiscard]] const std::vector<int>& coords() const { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  [[nodiscard]] int at(const RootSystem& rs, const PositiveRoot& root) const;
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_zero() const { return degree() == 0; }

  MultiExponent operator+(const MultiExponent& o) const;
  /// Throws InvalidArgument if any coordinate would become negative.
  MultiExponent operator-(const MultiExponent& o) const;

  auto operator<=>(const MultiExponent& o) const = default;
  bool operator==(const MultiExponent& o) const = default;

 private:
  std::vector<int> coords_;
};

/// s_{i,.}: total exponent in row i.
int row_total(const RootSystem& rs, const MultiExponent& s, int row);
/// s_{.,q}: total exponent in the column at J-position q.
int column_total(const RootSystem& rs, const MultiExponent& s, int col_position);

struct PathInequality {
  DyckPath path;
  int bound = 0;
  [[nodiscard]] int lhs(const MultiExponent& s) const;
  [[nodiscard]] bool holds(const MultiExponent& s) const { return lhs(s) <= bound; }
};

/// Element of the root lattice in simple-root coordinates.
struct WeightInRootLattice {
  std::vector<int> coeffs;
  auto operator<=>(const WeightInRootLattice& o) const = default;
  bool operator==(const WeightInRootLattice& o) const = default;
};

/// (offset, degree) -> dimension, where a weight mu is recorded by its offset
/// lambda - mu in simple-root coordinates. Zero entries are never stored.
class GradedDimensionTable {
 public:
  using Key = std::pair<WeightInRootLattice, int>;

  void add(const WeightInRootLattice& offset, int degree, std::uint64_t count = 1);
  [[nodiscard]] std::uint64_t at(const WeightInRootLattice& offset, int degree) const;
  [[nodiscard]] const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::uint64_t total() const;
  /// q = 1 specialization: offset -> multiplicity.
  [[nodiscard]] std::map<WeightInRootLattice, std::uint64_t> multiplicities() const;
  /// degree -> dimension summed over weights.
  [[nodiscard]] std::map<int, std::uint64_t> degree_profile() const;
  [[nodiscard]] int max_degree() const;

  bool operator==(const GradedDimensionTable& o) const = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

using Character = std::map<WeightInRootLattice, std::uint64_t>;

/// P(lambda) with its inequality list and cached enumeration data.
class Polytope {
 public:
  explicit Polytope(DominantWeight lambda);

  [[nodiscard]] const DominantWeight& weight() const { return lambda_; }
  [[nodiscard]] const RootSystem& roots() const { return *rs_; }
  [[nodiscard]] const std::vector<PathInequality>& inequalities() const { return ineqs_; }
  /// Indices of inequalities implied by another one with larger support and no larger bound.
  [[nodiscard]] const std::vector<std::size_t>& redundant() const { return redundant_; }

  [[nodiscard]] bool contains(const MultiExponent& s) const;
  /// First violated inequality in path order.
  [[nodiscard]] std::optional<std::size_t> first_violation(const MultiExponent& s) const;

  /// Visits every lattice point in lexicographic order of reading-order coordinates.
  void for_each_point(const std::function<void(const MultiExponent&)>& visit) const;
  [[nodiscard]] std::vector<MultiExponent> points() const;
  [[nodiscard]] std::uint64_t count() const;
  /// Largest degree of a lattice point.
  [[nodiscard]] int max_degree() const;

 private:
  void check(const MultiExponent& s) const;

  DominantWeight lambda_;
  const RootSystem* rs_;
  std::vector<PathInequality> ineqs_;
  std::vector<std::size_t> redundant_;
  std::vector<std::vector<std::size_t>> active_by_coord_;  // non-redundant inequalities through each coordinate
};

std::vector<PathInequality> inequalities(const DominantWeight& lambda);
bool contains(const DominantWeight& lambda, const MultiExponent& s);
std::vector<MultiExponent> enumerate_points(const DominantWeight& lambda);

WeightInRootLattice weight_of(const RootSystem& rs, const MultiExponent& s);
int degree_of(const MultiExponent& s);

/// lambda - wt(s) over S(lambda), recorded by offsets wt(s).
Character character(const DominantWeight& lambda);
GradedDimensionTable graded_character(const DominantWeight& lambda);

Integer weyl_dim(const DominantWeight& lambda);
/// Weight multiplicities of V(lambda), keyed by offset lambda - mu.
Character freudenthal_multiplicities(const DominantWeight& lambda);

}  // namespace sympbw
