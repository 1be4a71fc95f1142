#pragma once

// Exact arithmetic primitives shared by every module: GMP integers and
// rationals, sparse rational vectors and an incremental row-echelon form.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sympbw {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Sparse vector over Q, entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> entries);
  /// Builds from an accumulation map, dropping zero values.
  static SparseVector from_map(const std::map<std::uint32_t, Rational>& m);

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] Rational at(std::uint32_t index) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const SparseVector& other) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Row-echelon basis of a subspace of Q^N with leftmost-pivot rows.
///
/// Rows are stored normalized (pivot coefficient 1) and indexed by pivot.
/// Every stored row is zero at all smaller indices, so reduction scans a
/// working vector left to right exactly once.
class Echelon {
 public:
  /// Residual of v after eliminating every pivot coordinate.
  [[nodiscard]] SparseVector reduce(const SparseVector& v) const;
  /// Adds v to the span; returns true when the rank grew.
  bool insert(const SparseVector& v);
  [[nodiscard]] bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] bool has_pivot(std::uint32_t index) const { return rows_.contains(index); }

 private:
  std::map<std::uint32_t, SparseVector> rows_;
};

Integer binomial(unsigned n, unsigned k);

}  // namespace sympbw
