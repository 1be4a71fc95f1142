#include "sympbw/grmod.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace sympbw {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::monomial(const MultiExponent& s, const Rational& c) {
  Polynomial p(s.rank());
  p.add_term(s, c);
  return p;
}

Polynomial Polynomial::variable(int rank, std::size_t root, int power) {
  auto s = MultiExponent::zero(rank);
  s[root] = power;
  return monomial(s);
}

Rational Polynomial::coefficient(const MultiExponent& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiExponent& s, const Rational& c) {
  if (s.rank() != rank_) throw InvalidArgument("monomial rank does not match polynomial rank");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check(const Polynomial& o) const {
  if (rank_ != o.rank_) throw InvalidArgument("polynomial ranks differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  Polynomial r(rank_);
  for (const auto& [s, c] : terms_)
    for (const auto& [t, d] : o.terms_) r.add_term(s + t, c * d);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(rank_);
  if (c == 0) return r;
  for (const auto& [s, a] : terms_) r.terms_.emplace(s, a * c);
  return r;
}

// ---------------------------------------------------------------------------
// Derivations

std::string to_string(Derivation d) {
  switch (d) {
    case Derivation::unit:
      return "unit";
    case Derivation::chevalley:
      return "chevalley";
    case Derivation::adjoint:
      return "adjoint";
  }
  return "?";
}

namespace {

using GeneratorTable = std::vector<std::vector<std::optional<GeneratorImage>>>;  // [gamma][beta]

GeneratorTable build_table(int rank, Derivation variant) {
  const auto& rs = root_system(rank);
  GeneratorTable table(rs.size(), std::vector<std::optional<GeneratorImage>>(rs.size()));
  for (std::size_t gamma = 0; gamma < rs.size(); ++gamma) {
    if (variant == Derivation::chevalley && !rs.is_simple(gamma)) continue;
    for (std::size_t beta = 0; beta < rs.size(); ++beta) {
      auto target = rs.difference(beta, gamma);
      if (variant == Derivation::unit) {
        if (target) table[gamma][beta] = GeneratorImage{*target, Rational(1)};
        continue;
      }
      const auto& ch = chevalley_realization(rank);
      Rational c = variant == Derivation::chevalley
                       ? Rational(Integer(static_cast<long>(ch.ad_coeff(rs.row_of(gamma), beta))))
                       : ch.adjoint_coeff(gamma, beta);
      if (c == 0) continue;
      if (!target) throw std::logic_error("nonzero bracket without a root difference");
      table[gamma][beta] = GeneratorImage{*target, c};
    }
  }
  return table;
}

const GeneratorTable& generator_table(int rank, Derivation variant) {
  static std::mutex mutex;
  static std::map<std::pair<int, Derivation>, std::unique_ptr<GeneratorTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{rank, variant}];
  if (!slot) slot = std::make_unique<GeneratorTable>(build_table(rank, variant));
  return *slot;
}

}  // namespace

std::optional<GeneratorImage> partial_on_generator(int rank, std::size_t gamma, std::size_t beta, Derivation variant) {
  const auto& rs = root_system(rank);
  if (gamma >= rs.size() || beta >= rs.size()) throw InvalidArgument("root index out of range");
  if (variant == Derivation::chevalley && !rs.is_simple(gamma)) {
    throw InvalidArgument("chevalley derivation is only defined for simple roots");
  }
  return generator_table(rank, variant)[gamma][beta];
}

Polynomial partial_op(std::size_t gamma, const Polynomial& P, Derivation variant) {
  const int n = P.rank();
  const auto& rs = root_system(n);
  if (gamma >= rs.size()) throw InvalidArgument("root index out of range");
  if (variant == Derivation::chevalley && !rs.is_simple(gamma)) {
    throw InvalidArgument("chevalley derivation is only defined for simple roots");
  }
  const auto& row = generator_table(n, variant)[gamma];
  Polynomial out(n);
  for (const auto& [s, c] : P.terms()) {
    for (std::size_t beta = 0; beta < rs.size(); ++beta) {
      if (s[beta] == 0 || !row[beta]) continue;
      MultiExponent t(s);
      --t[beta];
      ++t[row[beta]->target];
      out.add_term(t, c * s[beta] * row[beta]->coeff);
    }
  }
  return out;
}

Polynomial partial_op(const PositiveRoot& gamma, const Polynomial& P, Derivation variant) {
  return partial_op(root_system(P.rank()).index_of(gamma), P, variant);
}

// ---------------------------------------------------------------------------
// Monomial order

MonomialOrderKey order_key(const MultiExponent& s) {
  const int n = s.rank();
  const auto& rs = root_system(n);
  MonomialOrderKey k;
  k.total_degree = s.degree();
  k.d_vector.assign(n, 0);
  for (std::size_t b = 0; b < rs.size(); ++b) k.d_vector[n - rs.row_of(b)] += s[b];
  k.lex_key.assign(s.coords().rbegin(), s.coords().rend());
  return k;
}

std::strong_ordering monomial_compare(const MultiExponent& s, const MultiExponent& t) {
  if (s.size() != t.size()) throw InvalidArgument("monomial ranks differ");
  if (s == t) return std::strong_ordering::equal;
  const auto ks = order_key(s);
  const auto kt = order_key(t);
  if (ks.total_degree != kt.total_degree) {
    return ks.total_degree > kt.total_degree ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ks.d_vector != kt.d_vector) {
    return ks.d_vector < kt.d_vector ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return ks.lex_key > kt.lex_key ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// Ideal generators

namespace {

using CellKey = std::pair<WeightInRootLattice, int>;

CellKey key_of(const RootSystem& rs, const MultiExponent& s) { return {weight_of(rs, s), s.degree()}; }

// Span of homogeneous polynomials in one cell with an incremental echelon form.
struct SpanBlock {
  std::map<MultiExponent, std::uint32_t> index;
  Echelon echelon;
  std::vector<Polynomial> basis;

  SparseVector vectorize(const Polynomial& p) {
    std::map<std::uint32_t, Rational> m;
    for (const auto& [s, c] : p.terms()) {
      auto [it, fresh] = index.try_emplace(s, static_cast<std::uint32_t>(index.size()));
      m[it->second] += c;
    }
    return SparseVector::from_map(m);
  }
};

}  // namespace

IdealGenerators ideal_generators(const DominantWeight& lambda, Derivation variant) {
  const int n = lambda.rank();
  const auto& rs = root_system(n);
  IdealGenerators gens{lambda, variant, {}, {}};

  auto sum = [&](int from, int to) {
    int b = 0;
    for (int k = from; k <= to; ++k) b += lambda.coeffs[k - 1];
    return b;
  };
  for (std::size_t b = 0; b < rs.size(); ++b) {
    const auto& r = rs.root(b);
    if (!r.col.barred() && r.col.value() < n) {
      gens.base.push_back(Polynomial::variable(n, b, sum(r.row, r.col.value()) + 1));
    } else if (rs.is_long_end(b)) {
      gens.base.push_back(Polynomial::variable(n, b, sum(r.row, n) + 1));
    }
  }

  std::vector<std::size_t> ops;
  for (std::size_t g = 0; g < rs.size(); ++g) {
    if (variant == Derivation::unit || rs.is_simple(g)) ops.push_back(g);
  }

  std::map<CellKey, SpanBlock> blocks;
  std::deque<std::pair<CellKey, std::size_t>> queue;
  auto offer = [&](const Polynomial& p) {
    auto key = key_of(rs, p.terms().begin()->first);
    auto& block = blocks[key];
    if (block.echelon.insert(block.vectorize(p))) {
      block.basis.push_back(p);
      queue.emplace_back(key, block.basis.size() - 1);
    }
  };
  for (const auto& g : gens.base) offer(g);
  while (!queue.empty()) {
    auto [key, pos] = queue.front();
    queue.pop_front();
    const Polynomial p = blocks[key].basis[pos];
    for (auto g : ops) {
      auto q = partial_op(g, p, variant);
      if (!q.is_zero()) offer(q);
    }
  }
  for (auto& [key, block] : blocks)
    for (auto& p : block.basis) gens.closure.push_back(std::move(p));
  return gens;
}

// ---------------------------------------------------------------------------
// Quotient cells

std::vector<MultiExponent> monomials_in_cell(int rank, const WeightInRootLattice& offset, int degree) {
  const auto& rs = root_system(rank);
  std::vector<MultiExponent> out;
  if (degree < 0 || static_cast<int>(offset.coeffs.size()) != rank) return out;
  std::vector<int> left(offset.coeffs);
  for (int x : left)
    if (x < 0) return out;
  std::vector<int> heights(rs.size());
  int max_height = 0;
  for (std::size_t b = 0; b < rs.size(); ++b) {
    const auto& e = rs.expansion(b);
    heights[b] = std::accumulate(e.begin(), e.end(), 0);
    max_height = std::max(max_height, heights[b]);
  }
  auto s = MultiExponent::zero(rank);

  std::function<void(std::size_t, int)> rec = [&](std::size_t b, int deg_left) {
    const int h = std::accumulate(left.begin(), left.end(), 0);
    if (h < deg_left || h > deg_left * max_height) return;
    if (b == rs.size()) {
      if (deg_left == 0 && h == 0) out.push_back(s);
      return;
    }
    const auto& e = rs.expansion(b);
    for (int v = 0; v <= deg_left; ++v) {
      bool ok = true;
      for (int k = 0; k < rank; ++k) ok = ok && left[k] >= v * e[k];
      if (!ok) break;
      s[b] = v;
      for (int k = 0; k < rank; ++k) left[k] -= v * e[k];
      rec(b + 1, deg_left - v);
      for (int k = 0; k < rank; ++k) left[k] += v * e[k];
    }
    s[b] = 0;
  };
  rec(0, degree);
  return out;
}

struct IdealQuotient::Cell {
  std::vector<MultiExponent> monomials;  // monomials outside S(lambda) first
  std::map<MultiExponent, std::uint32_t> index;
  std::size_t outside = 0;  // number of monomials outside S(lambda)
  Echelon ideal;
};

IdealQuotient::IdealQuotient(const DominantWeight& lambda, Derivation variant, std::size_t cell_cap)
    : lambda_(lambda),
      variant_(variant),
      cell_cap_(cell_cap),
      gens_(ideal_generators(lambda, variant)),
      polytope_(lambda) {
  const auto& rs = root_system(lambda.rank());
  for (const auto& g : gens_.closure) closure_blocks_[key_of(rs, g.terms().begin()->first)].push_back(&g);
}

IdealQuotient::~IdealQuotient() = default;

const IdealQuotient::Cell& IdealQuotient::cell(const WeightInRootLattice& offset, int degree) const {
  std::lock_guard lock(mutex_);
  auto& slot = cells_[{offset, degree}];
  if (slot) return *slot;

  const int n = lambda_.rank();
  auto cellp = std::make_unique<Cell>();
  auto all = monomials_in_cell(n, offset, degree);
  if (all.size() > cell_cap_) {
    throw SizeLimitExceeded("quotient cell has " + std::to_string(all.size()) + " monomials, cap is " +
                            std::to_string(cell_cap_));
  }
  std::vector<MultiExponent> inside;
  for (auto& s : all) (polytope_.contains(s) ? inside : cellp->monomials).push_back(s);
  cellp->outside = cellp->monomials.size();
  for (auto& s : inside) cellp->monomials.push_back(std::move(s));
  for (std::uint32_t i = 0; i < cellp->monomials.size(); ++i) cellp->index.emplace(cellp->monomials[i], i);

  const std::size_t full = cellp->monomials.size();
  for (const auto& [key, polys] : closure_blocks_) {
    if (cellp->ideal.rank() == full) break;
    const auto& [w, d] = key;
    if (d > degree) continue;
    WeightInRootLattice rest{offset.coeffs};
    bool fits = true;
    for (int k = 0; k < n; ++k) {
      rest.coeffs[k] -= w.coeffs[k];
      fits = fits && rest.coeffs[k] >= 0;
    }
    if (!fits) continue;
    for (const auto& t : monomials_in_cell(n, rest, degree - d)) {
      for (const Polynomial* g : polys) {
        std::map<std::uint32_t, Rational> v;
        for (const auto& [s, c] : g->terms()) v[cellp->index.at(s + t)] += c;
        cellp->ideal.insert(SparseVector::from_map(v));
        if (cellp->ideal.rank() == full) break;
      }
      if (cellp->ideal.rank() == full) break;
    }
  }
  slot = std::move(cellp);
  return *slot;
}

std::size_t IdealQuotient::quotient_dim(const WeightInRootLattice& offset, int degree) const {
  const auto& c = cell(offset, degree);
  return c.monomials.size() - c.ideal.rank();
}

std::size_t IdealQuotient::ideal_dim(const WeightInRootLattice& offset, int degree) const {
  return cell(offset, degree).ideal.rank();
}

namespace {

std::map<CellKey, Polynomial> homogeneous_parts(const Polynomial& P) {
  const auto& rs = root_system(P.rank());
  std::map<CellKey, Polynomial> parts;
  for (const auto& [s, c] : P.terms()) {
    parts.try_emplace(key_of(rs, s), P.rank()).first->second.add_term(s, c);
  }
  return parts;
}

}  // namespace

bool IdealQuotient::in_ideal(const Polynomial& P) const {
  if (P.rank() != lambda_.rank()) throw InvalidArgument("polynomial rank does not match weight rank");
  for (const auto& [key, part] : homogeneous_parts(P)) {
    const auto& c = cell(key.first, key.second);
    std::map<std::uint32_t, Rational> v;
    for (const auto& [s, a] : part.terms()) v[c.index.at(s)] += a;
    if (!c.ideal.contains(SparseVector::from_map(v))) return false;
  }
  return true;
}

Polynomial IdealQuotient::representative(const Polynomial& P) const {
  if (P.rank() != lambda_.rank()) throw InvalidArgument("polynomial rank does not match weight rank");
  Polynomial out(P.rank());
  for (const auto& [key, part] : homogeneous_parts(P)) {
    const auto& c = cell(key.first, key.second);
    std::map<std::uint32_t, Rational> v;
    for (const auto& [s, a] : part.terms()) v[c.index.at(s)] += a;
    for (const auto& [i, a] : c.ideal.reduce(SparseVector::from_map(v))) {
      if (i < c.outside) throw std::logic_error("monomials of S(lambda) do not span the quotient cell");
      out.add_term(c.monomials[i], a);
    }
  }
  return out;
}

GradedDimensionTable IdealQuotient::graded_dims(int max_degree) const {
  const int n = lambda_.rank();
  const auto& rs = root_system(n);
  GradedDimensionTable table;
  for (int d = 0; d <= max_degree; ++d) {
    // every weight offset carried by some monomial of degree d
    std::set<WeightInRootLattice> offsets;
    auto s = MultiExponent::zero(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int left) {
      if (b + 1 == rs.size()) {
        s[b] = left;
        offsets.insert(weight_of(rs, s));
        s[b] = 0;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        s[b] = v;
        rec(b + 1, left - v);
      }
      s[b] = 0;
    };
    rec(0, d);
    for (const auto& w : offsets) table.add(w, d, quotient_dim(w, d));
  }
  return table;
}

GradedDimensionTable quotient_graded_dims(const DominantWeight& lambda, int max_degree, Derivation variant,
                                          std::size_t cell_cap) {
  if (max_degree < 0) throw InvalidArgument("max degree must be non-negative");
  return IdealQuotient(lambda, variant, cell_cap).graded_dims(max_degree);
}

// ---------------------------------------------------------------------------
// Straightening

StraighteningPlan straightening_plan(const DyckPath& path, const MultiExponent& s) {
  const int n = s.rank();
  const auto& rs = root_system(n);
  if (path.indices.empty()) throw InvalidArgument("empty path");
  for (std::size_t b = 0; b < rs.size(); ++b) {
    if (s[b] != 0 && !path.contains(b)) throw InvalidArgument("multi-exponent is not supported on the path");
  }

  StraighteningPlan plan;
  plan.rank = n;
  plan.path = path;
  plan.shift = path.start_row() - 1;
  const int a = plan.shift;
  const int local_n = n - a;
  const std::size_t last = path.indices.back();
  plan.symplectic_end = rs.is_long_end(last);
  for (auto idx : path.indices) plan.sigma += s[idx];

  // Local coordinates: row r and J value v in the rank n - a subalgebra.
  auto root = [&](int r, int v, bool barred) {
    if (barred && v == local_n) barred = false;
    return rs.index_of(PositiveRoot{r + a, BarredIndex(v + a, barred, n)});
  };
  auto col = [&](int v, bool barred) {
    if (barred && v == local_n) barred = false;
    return column_total(rs, s, BarredIndex(v + a, barred, n).position(n));
  };
  auto row = [&](int r) { return row_total(rs, s, r + a); };

  int prev_row = 0;
  for (auto idx : path.indices) {
    if (rs.row_of(idx) != prev_row) plan.q_maxima.push_back(rs.col_of(idx));
    plan.q_maxima.back() = std::max(plan.q_maxima.back(), rs.col_of(idx));
    prev_row = rs.row_of(idx);
  }

  auto step = [](std::vector<PlanStep>& into, std::size_t r, int e, const char* stage) {
    if (e > 0) into.push_back(PlanStep{r, e, stage});
  };

  if (plan.symplectic_end) {
    const int i = rs.row_of(last) - a;
    plan.end_index = i;
    plan.start_root = root(1, 1, true);
    for (int q = 1; q <= i - 1; ++q) step(plan.delta1, root(1, q + 1, true), col(q, false), "delta1");
    for (int q = i; q <= local_n - 1; ++q) {
      step(plan.delta1, root(1, q, false), col(q, false) + col(q + 1, true), "delta2");
    }
    for (int q = local_n - 1; q >= i; --q) step(plan.delta1, root(q + 1, q + 1, true), col(q, false), "delta3");
    if (i >= 2) step(plan.delta1, root(1, i - 1, false), col(i, true) + row(i), "link");
    for (int q = i - 2; q >= 1; --q) step(plan.delta2, root(1, q, false), row(q + 1), "Delta2");
  } else {
    const int j = rs.root(last).col.value() - a;
    plan.end_index = j;
    plan.start_root = root(1, j, false);
    for (int q = 1; q <= j - 1; ++q) step(plan.delta1, root(q + 1, j, false), col(q, false), "B");
    for (int q = j - 1; q >= 1; --q) step(plan.delta2, root(1, q, false), row(q + 1), "A");
  }
  return plan;
}

Polynomial apply_plan(const StraighteningPlan& plan, Derivation variant) {
  auto p = Polynomial::variable(plan.rank, plan.start_root, plan.sigma);
  for (const auto* steps : {&plan.delta1, &plan.delta2}) {
    for (const auto& st : *steps)
      for (int k = 0; k < st.exponent; ++k) p = partial_op(st.root, p, variant);
  }
  return p;
}

StraighteningElement straightening_element(const DominantWeight& lambda, const DyckPath& path, const MultiExponent& s,
                                           Derivation variant) {
  const int n = lambda.rank();
  if (s.rank() != n) throw InvalidArgument("multi-exponent rank does not match weight rank");
  const auto& rs = root_system(n);
  const int bound = path_bound(lambda, rs, path.indices.front(), path.indices.back());
  auto plan = straightening_plan(path, s);
  if (plan.sigma <= bound) throw InvalidArgument("multi-exponent does not violate the path bound");

  auto element = apply_plan(plan, variant);
  Rational lead = element.coefficient(s);
  if (lead == 0) throw StraighteningFailure("leading coefficient vanishes");
  for (const auto& [t, c] : element.terms()) {
    if (t != s && monomial_compare(s, t) != std::strong_ordering::less) {
      throw StraighteningFailure("a monomial of the straightening element precedes f^s");
    }
  }
  return {std::move(element), lead};
}

Polynomial normal_form(const Polynomial& P, const DominantWeight& lambda, const NormalFormOptions& options) {
  const int n = lambda.rank();
  if (P.rank() != n) throw InvalidArgument("polynomial rank does not match weight rank");
  Polytope poly(lambda);
  std::map<std::pair<std::size_t, MultiExponent>, StraighteningElement> cache;

  Polynomial cur(P);
  for (std::size_t steps = 0;; ++steps) {
    if (steps >= options.step_cap) throw std::logic_error("normal form did not terminate within the step cap");
    const MultiExponent* worst = nullptr;
    for (const auto& [s, c] : cur.terms()) {
      if (poly.contains(s)) continue;
      if (!worst || monomial_compare(s, *worst) == std::strong_ordering::less) worst = &s;
    }
    if (!worst) return cur;

    const MultiExponent s = *worst;
    const Rational coef = cur.coefficient(s);
    const std::size_t q = *poly.first_violation(s);
    const auto& path = poly.inequalities()[q].path;
    auto s1 = MultiExponent::zero(n);
    for (auto idx : path.indices) s1[idx] = s[idx];
    const auto s2 = s - s1;

    auto it = cache.find({q, s1});
    if (it == cache.end()) {
      it = cache.emplace(std::pair{q, s1}, straightening_element(lambda, path, s1, options.variant)).first;
    }
    const auto& se = it->second;
    cur -= se.element * Polynomial::monomial(s2, coef / se.leading_coeff);
  }
}

}  // namespace sympbw
