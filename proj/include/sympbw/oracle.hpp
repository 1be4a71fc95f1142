#pragma once

// Explicit V(lambda) = U(n^-) v_lambda inside a tensor product of exterior
// powers of C^{2n}, its PBW filtration, the associated graded action, and the
// graded span of v_lambda (x) v_mu in a tensor product of graded modules.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sympbw/exact.hpp"
#include "sympbw/polytope.hpp"
#include "sympbw/rootsys.hpp"

namespace sympbw {

/// Order of the factors in an ordered product f^s = prod f_beta^{s_beta}.
enum class PbwOrder {
  /// Largest variable on the left: the smallest variable acts on v_lambda first.
  descending,
  /// Smallest variable on the left: the largest variable acts first.
  ascending,
};

class RepresentationSpace {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  /// Tensor product of (Lambda^i C^{2n})^{(x) m_i}; throws SizeLimitExceeded above `cap`.
  explicit RepresentationSpace(const DominantWeight& lambda, std::size_t cap = kDefaultCap);

  [[nodiscard]] const DominantWeight& weight() const { return lambda_; }
  [[nodiscard]] int rank() const { return lambda_.rank(); }
  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  /// e_1 ^ ... ^ e_i in every factor; ambient index 0.
  [[nodiscard]] SparseVector highest_vector() const;
  /// f_root acting on an ambient vector.
  [[nodiscard]] SparseVector apply(std::size_t root, const SparseVector& v) const;
  /// e_root acting on an ambient vector.
  [[nodiscard]] SparseVector apply_raising(std::size_t root, const SparseVector& v) const;

  /// Filled by build_module: basis of U(n^-) v_lambda grouped by level.
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<SparseVector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<WeightInRootLattice>& weight_tags() const { return weights_; }
  [[nodiscard]] const std::vector<int>& level_tags() const { return levels_; }
  [[nodiscard]] int max_level() const { return levels_.empty() ? -1 : levels_.back(); }

 private:
  friend RepresentationSpace build_module(const DominantWeight& lambda, std::size_t cap);

  struct Factor {
    int size;  // exterior power degree i
    std::uint32_t stride;
    std::uint32_t extent;
  };
  // [i][root][subset] -> (target subset, coefficient); index 0 unused
  using WedgeTable = std::vector<std::vector<std::vector<std::pair<std::uint32_t, long>>>>;

  SparseVector act(const std::vector<WedgeTable>& tables, std::size_t root, const SparseVector& v) const;

  DominantWeight lambda_;
  std::size_t ambient_dim_ = 1;
  std::vector<Factor> factors_;
  std::vector<WedgeTable> lowering_;  // indexed by exterior degree
  std::vector<WedgeTable> raising_;

  std::vector<SparseVector> basis_;
  std::vector<WeightInRootLattice> weights_;
  std::vector<int> levels_;
};

/// Closes {v_lambda} under all f_alpha level by level; a vector's level is the
/// smallest d with the vector in U(n^-)_d v_lambda.
RepresentationSpace build_module(const DominantWeight& lambda, std::size_t cap = RepresentationSpace::kDefaultCap);

/// dim V(lambda)^mu_d - dim V(lambda)^mu_{d-1}, from ordered products f^s v_lambda with deg s <= d.
GradedDimensionTable pbw_filtration_dims(const RepresentationSpace& module, PbwOrder order = PbwOrder::descending);
GradedDimensionTable pbw_filtration_dims(const DominantWeight& lambda,
                                         std::size_t cap = RepresentationSpace::kDefaultCap);

/// Applies the ordered product f^s to v_lambda in the unfiltered module.
SparseVector ordered_monomial(const RepresentationSpace& module, const MultiExponent& s,
                              PbwOrder order = PbwOrder::descending);
/// Rank of {f^s v_lambda : s in points}.
std::size_t ordered_monomial_rank(const RepresentationSpace& module, const std::vector<MultiExponent>& points,
                                  PbwOrder order = PbwOrder::descending);

/// Sparse square matrix stored by columns.
struct GradedOperator {
  std::vector<std::map<std::uint32_t, Rational>> columns;
};

/// The action of each f_alpha on gr V(lambda) in the basis of build_module,
/// mapping level d into level d + 1.
struct GradedAction {
  std::size_t dim = 0;
  std::vector<int> levels;
  std::vector<WeightInRootLattice> weights;
  std::vector<GradedOperator> f;  // indexed by root

  [[nodiscard]] std::map<std::uint32_t, Rational> apply(std::size_t root,
                                                        const std::map<std::uint32_t, Rational>& v) const;
  /// f^s applied to the image of v_lambda (basis vector 0).
  [[nodiscard]] std::map<std::uint32_t, Rational> monomial(const MultiExponent& s) const;
};

GradedAction graded_action(const RepresentationSpace& module);

/// Graded dimensions of S(n^-)(v_lambda (x) v_mu) inside gr V(lambda) (x) gr V(mu),
/// keyed by the offset from lambda + mu and the sum of levels.
GradedDimensionTable tensor_cartan_dims(const DominantWeight& lambda, const DominantWeight& mu,
                                        std::size_t cap = RepresentationSpace::kDefaultCap);

}  // namespace sympbw
