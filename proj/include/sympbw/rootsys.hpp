#pragma once

// Root data for type C_n: the barred alphabet J, positive roots in triangle
// reading order, Dyck-path endpoint bounds and a concrete matrix model of
// sp_{2n} that supplies root vectors and bracket constants.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympbw/exact.hpp"

namespace sympbw {

/// Raised for invalid ranks, weights or out-of-range arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size cap.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of J = {1 < ... < n < n-1bar < ... < 1bar}; nbar is stored as n.
class BarredIndex {
 public:
  BarredIndex(int value, bool barred, int rank);

  [[nodiscard]] int value() const { return value_; }
  [[nodiscard]] bool barred() const { return barred_; }
  /// 0-based position in J for the given rank.
  [[nodiscard]] int position(int rank) const;
  static BarredIndex from_position(int position, int rank);
  /// Smallest element of J above this one, if any.
  [[nodiscard]] std::optional<BarredIndex> successor(int rank) const;

  [[nodiscard]] std::string label() const;

  // Unbarred values ascend, then barred values descend; rank-independent.
  std::strong_ordering operator<=>(const BarredIndex& other) const;
  bool operator==(const BarredIndex& other) const = default;

 private:
  int value_;
  bool barred_;
};

/// alpha_{row,col}: row i in 1..n, col q in J with i <= unbar(q).
struct PositiveRoot {
  int row;
  BarredIndex col;

  [[nodiscard]] std::string label() const;
  bool operator==(const PositiveRoot& other) const = default;
};

struct DominantWeight {
  std::vector<int> coeffs;

  /// Validates length >= 1 and non-negative entries.
  explicit DominantWeight(std::vector<int> m);
  static DominantWeight zero(int rank);
  static DominantWeight fundamental(int rank, int i);

  [[nodiscard]] int rank() const { return static_cast<int>(coeffs.size()); }
  [[nodiscard]] int size() const;  // sum of the m_i
  [[nodiscard]] int minimal_support() const;  // smallest i with m_i != 0, or 0

  DominantWeight operator+(const DominantWeight& other) const;
  bool operator==(const DominantWeight& other) const = default;
};

std::vector<PositiveRoot> positive_roots(int rank);

/// Cached root data for one rank. Root indices follow triangle reading order,
/// which is also the increasing order of the variables f_alpha.
class RootSystem {
 public:
  explicit RootSystem(int rank);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] std::size_t size() const { return roots_.size(); }
  [[nodiscard]] const std::vector<PositiveRoot>& roots() const { return roots_; }
  [[nodiscard]] const PositiveRoot& root(std::size_t index) const { return roots_.at(index); }

  [[nodiscard]] std::optional<std::size_t> find(int row, int col_position) const;
  [[nodiscard]] std::optional<std::size_t> find(const PositiveRoot& root) const;
  [[nodiscard]] std::size_t index_of(const PositiveRoot& root) const;
  [[nodiscard]] std::size_t index_of(int row, int col_position) const;

  [[nodiscard]] int row_of(std::size_t index) const { return roots_[index].row; }
  [[nodiscard]] int col_of(std::size_t index) const { return col_pos_[index]; }

  /// Coefficients over the simple roots alpha_1..alpha_n.
  [[nodiscard]] const std::vector<int>& expansion(std::size_t index) const { return expansion_[index]; }
  [[nodiscard]] std::optional<std::size_t> find_by_expansion(const std::vector<int>& coeffs) const;

  [[nodiscard]] std::size_t simple(int k) const;  // index of alpha_k
  [[nodiscard]] bool is_simple(std::size_t index) const;
  /// alpha_{j,jbar} (including alpha_{n,n}).
  [[nodiscard]] bool is_long_end(std::size_t index) const;

  /// Right and down neighbours in the triangle graph.
  [[nodiscard]] std::vector<std::size_t> successors(std::size_t index) const;

  /// Index of beta - alpha when it is a positive root.
  [[nodiscard]] std::optional<std::size_t> difference(std::size_t beta, std::size_t alpha) const;

 private:
  int n_;
  std::vector<PositiveRoot> roots_;
  std::vector<int> col_pos_;
  std::vector<std::vector<int>> expansion_;
  std::map<std::vector<int>, std::size_t> by_expansion_;
  std::vector<std::vector<int>> grid_;  // [row-1][col position] -> index or -1
};

std::vector<PositiveRoot> root_successors(const RootSystem& rs, const PositiveRoot& alpha);

/// Right-hand side of the path inequality for a path from `start` to `end`.
int path_bound(const DominantWeight& lambda, const RootSystem& rs, std::size_t start, std::size_t end);
int path_bound(const DominantWeight& lambda, const PositiveRoot& start, const PositiveRoot& end);

/// Dense small integer matrix; dimensions never exceed 2n.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0) {}
  static IntMatrix unit(int dim, int r, int c);

  [[nodiscard]] int dim() const { return dim_; }
  long long& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  long long operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] IntMatrix transpose() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(long long s) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  int dim_ = 0;
  std::vector<long long> a_;
};

IntMatrix bracket(const IntMatrix& x, const IntMatrix& y);

/// Coefficient c with x == c * y, or nullopt when x is not a multiple of y.
std::optional<Rational> proportionality(const IntMatrix& x, const IntMatrix& y);

/// sp_{2n} = {X : X^T S + S X = 0} for the antidiagonal skew form S.
class ChevalleyRealization {
 public:
  explicit ChevalleyRealization(int rank);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] const RootSystem& roots() const { return rs_; }
  [[nodiscard]] const IntMatrix& form() const { return form_; }

  [[nodiscard]] const IntMatrix& e(int k) const { return e_.at(k - 1); }
  [[nodiscard]] const IntMatrix& f(int k) const { return f_.at(k - 1); }
  [[nodiscard]] const IntMatrix& h(int k) const { return h_.at(k - 1); }

  /// Root vectors e_alpha, f_alpha indexed by root index.
  [[nodiscard]] const IntMatrix& raising(std::size_t alpha) const { return raise_.at(alpha); }
  [[nodiscard]] const IntMatrix& lowering(std::size_t alpha) const { return lower_.at(alpha); }

  /// c with [e_k, f_beta] = c f_{beta - alpha_k}; zero when beta - alpha_k is not a positive root.
  [[nodiscard]] long long ad_coeff(int k, std::size_t beta) const;
  /// c with [e_gamma, f_beta] = c f_{beta - gamma} (projection to n^-), for any positive gamma.
  [[nodiscard]] const Rational& adjoint_coeff(std::size_t gamma, std::size_t beta) const;

  [[nodiscard]] bool in_algebra(const IntMatrix& x) const;
  /// Lie algebra element of the diagonal Cartan with a_i on slot i.
  [[nodiscard]] IntMatrix cartan(const std::vector<long long>& a) const;

 private:
  int n_;
  RootSystem rs_;
  IntMatrix form_;
  std::vector<IntMatrix> e_, f_, h_;
  std::vector<IntMatrix> raise_, lower_;
  std::vector<std::vector<Rational>> adjoint_;  // [gamma][beta]
};

const ChevalleyRealization& chevalley_realization(int rank);
const RootSystem& root_system(int rank);

/// Cartan matrix a_{kl} = <alpha_l, alpha_k^vee> of C_n (alpha_n long).
std::vector<std::vector<int>> cartan_matrix(int rank);

}  // namespace sympbw
