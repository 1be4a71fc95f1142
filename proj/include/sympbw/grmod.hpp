#pragma once

// Polynomials in the root vectors f_alpha, the derivations induced by n^+,
// the ideal I(lambda), its graded quotient dimensions, and the straightening
// elements that rewrite monomials outside S(lambda).

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sympbw/dyck.hpp"
#include "sympbw/exact.hpp"
#include "sympbw/polytope.hpp"

namespace sympbw {

/// Sparse polynomial in f_alpha (alpha > 0) with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<MultiExponent, Rational>;

  explicit Polynomial(int rank) : rank_(rank) {}
  static Polynomial monomial(const MultiExponent& s, const Rational& c = 1);
  /// f_alpha^power for the root with the given reading index.
  static Polynomial variable(int rank, std::size_t root, int power = 1);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const MultiExponent& s) const;

  void add_term(const MultiExponent& s, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  bool operator==(const Polynomial& o) const = default;

 private:
  void check(const Polynomial& o) const;

  int rank_;
  Terms terms_;
};

/// How n^+ acts on f_beta.
enum class Derivation {
  /// d_gamma f_beta = f_{beta - gamma} when that is a positive root, coefficient 1.
  unit,
  /// ad e_k projected to n^-, simple gamma = alpha_k only.
  chevalley,
  /// ad e_gamma projected to n^-, any positive gamma.
  adjoint,
};

std::string to_string(Derivation d);

struct GeneratorImage {
  std::size_t target;  // reading index of beta - gamma
  Rational coeff;
};

/// Image of f_beta under d_gamma, or nullopt when it vanishes.
/// Throws InvalidArgument for the chevalley variant with non-simple gamma.
std::optional<GeneratorImage> partial_on_generator(int rank, std::size_t gamma, std::size_t beta, Derivation variant);

/// The derivation d_gamma applied to P.
Polynomial partial_op(const PositiveRoot& gamma, const Polynomial& P, Derivation variant);
Polynomial partial_op(std::size_t gamma, const Polynomial& P, Derivation variant);

/// Sort key of the order in which f^s precedes f^t when s has larger degree,
/// then smaller d-vector, then larger homogeneous-lex monomial.
struct MonomialOrderKey {
  int total_degree = 0;
  std::vector<int> d_vector;  // (s_{n,.}, ..., s_{1,.})
  std::vector<int> lex_key;   // exponents from the largest variable down
};

MonomialOrderKey order_key(const MultiExponent& s);

/// `less` iff f^s comes strictly before f^t in the order above.
std::strong_ordering monomial_compare(const MultiExponent& s, const MultiExponent& t);

struct IdealGenerators {
  DominantWeight lambda;
  Derivation variant;
  std::vector<Polynomial> base;     // f_{alpha_{i,j}}^{m_i+...+m_j+1}, f_{alpha_{i,ibar}}^{m_i+...+m_n+1}
  std::vector<Polynomial> closure;  // basis of the span of all derivatives of `base`
};

/// Base relations and their closure under the derivations. The chevalley and
/// adjoint variants close under the n simple operators; the unit variant under
/// all n^2 unit operators.
IdealGenerators ideal_generators(const DominantWeight& lambda, Derivation variant = Derivation::chevalley);

/// Graded pieces of S(n^-)/I(lambda) by exact row reduction, cell by cell.
class IdealQuotient {
 public:
  static constexpr std::size_t kDefaultCellCap = 200000;

  explicit IdealQuotient(const DominantWeight& lambda, Derivation variant = Derivation::chevalley,
                         std::size_t cell_cap = kDefaultCellCap);
  ~IdealQuotient();
  IdealQuotient(const IdealQuotient&) = delete;
  IdealQuotient& operator=(const IdealQuotient&) = delete;

  [[nodiscard]] const DominantWeight& weight() const { return lambda_; }
  [[nodiscard]] const IdealGenerators& generators() const { return gens_; }

  /// dim of the quotient in weight lambda - offset and the given degree.
  std::size_t quotient_dim(const WeightInRootLattice& offset, int degree) const;
  /// dim of the ideal itself in that cell.
  std::size_t ideal_dim(const WeightInRootLattice& offset, int degree) const;
  bool in_ideal(const Polynomial& P) const;
  /// The unique polynomial supported on S(lambda) congruent to P modulo I(lambda).
  /// Throws std::logic_error if the S(lambda) monomials do not span the quotient.
  Polynomial representative(const Polynomial& P) const;
  /// Every cell of degree <= max_degree.
  GradedDimensionTable graded_dims(int max_degree) const;

 private:
  struct Cell;
  const Cell& cell(const WeightInRootLattice& offset, int degree) const;

  DominantWeight lambda_;
  Derivation variant_;
  std::size_t cell_cap_;
  IdealGenerators gens_;
  Polytope polytope_;
  std::map<std::pair<WeightInRootLattice, int>, std::vector<const Polynomial*>> closure_blocks_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<WeightInRootLattice, int>, std::unique_ptr<Cell>> cells_;
};

GradedDimensionTable quotient_graded_dims(const DominantWeight& lambda, int max_degree,
                                          Derivation variant = Derivation::chevalley,
                                          std::size_t cell_cap = IdealQuotient::kDefaultCellCap);

/// All monomials with the given weight offset and degree, in increasing order.
std::vector<MultiExponent> monomials_in_cell(int rank, const WeightInRootLattice& offset, int degree);

struct PlanStep {
  std::size_t root;  // operator d_root
  int exponent;
  std::string stage;  // "delta1", "delta2", "delta3", "link", "Delta2", "B", "A"
};

/// The operator sequence rewriting f_{a,abar}^Sigma (or f_{a,j}^Sigma for paths
/// ending at a simple root alpha_j, j < n) into c f^s plus later monomials.
struct StraighteningPlan {
  int rank = 0;
  DyckPath path;
  bool symplectic_end = true;  // path ends at alpha_{i,ibar}
  int shift = 0;               // start row minus one
  int end_index = 0;           // i (symplectic end) or j, in local coordinates
  std::vector<int> q_maxima;   // largest J position per visited row
  int sigma = 0;
  std::size_t start_root = 0;
  std::vector<PlanStep> delta1;  // in application order
  std::vector<PlanStep> delta2;  // in application order
};

StraighteningPlan straightening_plan(const DyckPath& path, const MultiExponent& s);
Polynomial apply_plan(const StraighteningPlan& plan, Derivation variant = Derivation::adjoint);

struct StraighteningElement {
  Polynomial element;
  Rational leading_coeff;
};

/// Thrown when an element does not have f^s as its first monomial.
class StraighteningFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requires s supported on `path` with path sum above its bound. Only the
/// adjoint variant is guaranteed to produce an element of I(lambda); unit
/// coefficients satisfy the same leading-term law but leave the ideal from rank 3.
StraighteningElement straightening_element(const DominantWeight& lambda, const DyckPath& path, const MultiExponent& s,
                                           Derivation variant = Derivation::adjoint);

struct NormalFormOptions {
  Derivation variant = Derivation::adjoint;
  std::size_t step_cap = 1000000;
};

/// Rewrites every monomial outside S(lambda) with straightening elements.
Polynomial normal_form(const Polynomial& P, const DominantWeight& lambda, const NormalFormOptions& options = {});

}  // namespace sympbw
