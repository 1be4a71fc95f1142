#pragma once

// The verification battery: each check compares one module against an
// independent computation over a range of inputs and counts the cases that agree.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympbw/rootsys.hpp"

namespace sympbw {

struct CheckResult {
  std::string name;
  std::string params;
  std::uint64_t cases = 0;      // inputs examined
  std::uint64_t agreeing = 0;   // inputs where both sides matched
  std::uint64_t expected = 0;   // agreeing count required to pass; normally `cases`
  std::string detail;           // first disagreement, empty when none

  [[nodiscard]] bool pass() const { return agreeing == expected; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const { return checks.size() - passed(); }
  [[nodiscard]] bool all_passed() const { return failed() == 0; }
};

/// Dominant weights of the given rank with sum m_i <= max_total and every m_i <= max_coeff,
/// in lexicographic order of (m_1, ..., m_n).
std::vector<DominantWeight> dominant_weights(int rank, int max_total, int max_coeff);

/// |S(lambda)| == weyl_dim(lambda).
CheckResult check_dimension_identity(const std::vector<DominantWeight>& weights);
/// Polytope character == Freudenthal multiplicities.
CheckResult check_character_identity(const std::vector<DominantWeight>& weights);
/// graded_character == quotient_graded_dims == pbw_filtration_dims, entrywise.
CheckResult check_graded_equality(const std::vector<DominantWeight>& weights);
/// For every path and every s on it with path sum bound + 1: the straightening
/// element has f^s as first monomial with nonzero coefficient and lies in I(lambda),
/// and normal_form(f^s) is supported on S(lambda) and equals the representative.
CheckResult check_straightening_law(const std::vector<DominantWeight>& weights);
/// Totality within a degree, transitivity and multiplicativity on random triples.
CheckResult check_order_laws(int max_rank, std::uint64_t triples_per_rank, std::uint64_t seed);
/// Unit operators against the case-by-case generator table for every root pair up to
/// `unit_max_rank`; chevalley operators on simple roots against the unit support up to
/// `chevalley_max_rank`.
CheckResult check_derivation_table(int unit_max_rank, int chevalley_max_rank);
/// Iterated peeling of every point, fundamental points against the polytope, and the
/// binomial identity.
CheckResult check_peeling(const std::vector<DominantWeight>& weights, int fundamental_max_rank,
                          int binomial_max_rank);
/// tensor_cartan_dims(lambda, mu) == pbw_filtration_dims(lambda + mu).
CheckResult check_cartan_components(const std::vector<std::pair<DominantWeight, DominantWeight>>& pairs);
/// {f^s v_lambda : s in S(lambda)} has rank |S(lambda)| == dim V(lambda).
CheckResult check_ordered_basis(const std::vector<DominantWeight>& weights);

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 2;
  int max_weight = 3;
  std::uint64_t seed = 1;
  /// Name of a suite whose expected count is deliberately corrupted.
  std::string inject_failure;
};

/// dimension, character, graded, straightening, order, derivation, peeling, cartan, basis.
const std::vector<std::string>& verify_suites();

/// Throws InvalidArgument for an unknown suite or out-of-range bounds.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace sympbw
