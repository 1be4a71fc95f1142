#include "sympbw/polytope.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace sympbw {

// ---------------------------------------------------------------------------
// MultiExponent

MultiExponent::MultiExponent(std::vector<int> coords) : coords_(std::move(coords)) {
  std::size_t r = 1;
  while (r * r < coords_.size()) ++r;
  if (coords_.empty() || r * r != coords_.size()) {
    throw InvalidArgument("multi-exponent length must be n^2 for some n >= 1");
  }
  for (int c : coords_) {
    if (c < 0) throw InvalidArgument("multi-exponent entries must be non-negative");
  }
}

MultiExponent MultiExponent::zero(int rank) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  return MultiExponent(std::vector<int>(static_cast<std::size_t>(rank) * rank, 0));
}

MultiExponent MultiExponent::unit(int rank, std::size_t root_index) {
  auto s = zero(rank);
  s.coords_.at(root_index) = 1;
  return s;
}

int MultiExponent::rank() const {
  int r = 0;
  while (static_cast<std::size_t>(r) * r < coords_.size()) ++r;
  return r;
}

int MultiExponent::at(const RootSystem& rs, const PositiveRoot& root) const {
  return coords_.at(rs.index_of(root));
}

int MultiExponent::degree() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

MultiExponent MultiExponent::operator+(const MultiExponent& o) const {
  if (size() != o.size()) throw InvalidArgument("multi-exponent ranks differ");
  MultiExponent r(*this);
  for (std::size_t i = 0; i < size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

MultiExponent MultiExponent::operator-(const MultiExponent& o) const {
  if (size() != o.size()) throw InvalidArgument("multi-exponent ranks differ");
  MultiExponent r(*this);
  for (std::size_t i = 0; i < size(); ++i) {
    r.coords_[i] -= o.coords_[i];
    if (r.coords_[i] < 0) throw InvalidArgument("multi-exponent difference has a negative entry");
  }
  return r;
}

int row_total(const RootSystem& rs, const MultiExponent& s, int row) {
  int t = 0;
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs.row_of(i) == row) t += s[i];
  return t;
}

int column_total(const RootSystem& rs, const MultiExponent& s, int col_position) {
  int t = 0;
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs.col_of(i) == col_position) t += s[i];
  return t;
}

int PathInequality::lhs(const MultiExponent& s) const {
  int sum = 0;
  for (auto idx : path.indices) sum += s[idx];
  return sum;
}

// ---------------------------------------------------------------------------
// GradedDimensionTable

void GradedDimensionTable::add(const WeightInRootLattice& offset, int degree, std::uint64_t count) {
  if (count == 0) return;
  entries_[{offset, degree}] += count;
}

std::uint64_t GradedDimensionTable::at(const WeightInRootLattice& offset, int degree) const {
  auto it = entries_.find({offset, degree});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t GradedDimensionTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

std::map<WeightInRootLattice, std::uint64_t> GradedDimensionTable::multiplicities() const {
  std::map<WeightInRootLattice, std::uint64_t> m;
  for (const auto& [k, v] : entries_) m[k.first] += v;
  return m;
}

std::map<int, std::uint64_t> GradedDimensionTable::degree_profile() const {
  std::map<int, std::uint64_t> m;
  for (const auto& [k, v] : entries_) m[k.second] += v;
  return m;
}

int GradedDimensionTable::max_degree() const {
  int d = -1;
  for (const auto& [k, v] : entries_) d = std::max(d, k.second);
  return d;
}

// ---------------------------------------------------------------------------
// Polytope

Polytope::Polytope(DominantWeight lambda) : lambda_(std::move(lambda)), rs_(&root_system(lambda_.rank())) {
  for (auto& p : enumerate_paths(lambda_.rank())) {
    const int b = path_bound(lambda_, *rs_, p.indices.front(), p.indices.back());
    ineqs_.push_back(PathInequality{std::move(p), b});
  }

  auto subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t a = 0; a < ineqs_.size(); ++a) {
    for (std::size_t b = 0; b < ineqs_.size(); ++b) {
      if (a == b) continue;
      const auto& ia = ineqs_[a];
      const auto& ib = ineqs_[b];
      if (subset(ia.path.indices, ib.path.indices) && ia.bound >= ib.bound) {
        redundant_.push_back(a);
        break;
      }
    }
  }

  active_by_coord_.assign(rs_->size(), {});
  for (std::size_t q = 0; q < ineqs_.size(); ++q) {
    if (std::binary_search(redundant_.begin(), redundant_.end(), q)) continue;
    for (auto idx : ineqs_[q].path.indices) active_by_coord_[idx].push_back(q);
  }
  for (std::size_t c = 0; c < rs_->size(); ++c) {
    if (active_by_coord_[c].empty()) throw std::logic_error("coordinate not bounded by any path");
  }
}

void Polytope::check(const MultiExponent& s) const {
  if (s.size() != rs_->size()) throw InvalidArgument("multi-exponent rank does not match weight rank");
}

bool Polytope::contains(const MultiExponent& s) const { return !first_violation(s).has_value(); }

std::optional<std::size_t> Polytope::first_violation(const MultiExponent& s) const {
  check(s);
  for (std::size_t q = 0; q < ineqs_.size(); ++q)
    if (!ineqs_[q].holds(s)) return q;
  return std::nullopt;
}

void Polytope::for_each_point(const std::function<void(const MultiExponent&)>& visit) const {
  const std::size_t dim = rs_->size();
  std::vector<int> slack(ineqs_.size());
  for (std::size_t q = 0; q < ineqs_.size(); ++q) slack[q] = ineqs_[q].bound;
  MultiExponent s = MultiExponent::zero(lambda_.rank());

  // Every partial assignment extends by zeros, so the search has no dead ends.
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == dim) {
      visit(s);
      return;
    }
    int cap = slack[active_by_coord_[c].front()];
    for (auto q : active_by_coord_[c]) cap = std::min(cap, slack[q]);
    for (int v = 0; v <= cap; ++v) {
      s[c] = v;
      for (auto q : active_by_coord_[c]) slack[q] -= v;
      self(self, c + 1);
      for (auto q : active_by_coord_[c]) slack[q] += v;
    }
    s[c] = 0;
  };
  rec(rec, 0);
}

std::vector<MultiExponent> Polytope::points() const {
  std::vector<MultiExponent> out;
  for_each_point([&](const MultiExponent& s) { out.push_back(s); });
  return out;
}

std::uint64_t Polytope::count() const {
  std::uint64_t n = 0;
  for_each_point([&](const MultiExponent&) { ++n; });
  return n;
}

int Polytope::max_degree() const {
  int d = 0;
  for_each_point([&](const MultiExponent& s) { d = std::max(d, s.degree()); });
  return d;
}

std::vector<PathInequality> inequalities(const DominantWeight& lambda) { return Polytope(lambda).inequalities(); }

bool contains(const DominantWeight& lambda, const MultiExponent& s) { return Polytope(lambda).contains(s); }

std::vector<MultiExponent> enumerate_points(const DominantWeight& lambda) { return Polytope(lambda).points(); }

WeightInRootLattice weight_of(const RootSystem& rs, const MultiExponent& s) {
  if (s.size() != rs.size()) throw InvalidArgument("multi-exponent rank does not match root system");
  WeightInRootLattice w{std::vector<int>(rs.rank(), 0)};
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (s[i] == 0) continue;
    const auto& e = rs.expansion(i);
    for (int k = 0; k < rs.rank(); ++k) w.coeffs[k] += s[i] * e[k];
  }
  return w;
}

int degree_of(const MultiExponent& s) { return s.degree(); }

Character character(const DominantWeight& lambda) {
  Polytope poly(lambda);
  Character ch;
  poly.for_each_point([&](const MultiExponent& s) { ++ch[weight_of(poly.roots(), s)]; });
  return ch;
}

GradedDimensionTable graded_character(const DominantWeight& lambda) {
  Polytope poly(lambda);
  GradedDimensionTable t;
  poly.for_each_point([&](const MultiExponent& s) { t.add(weight_of(poly.roots(), s), s.degree()); });
  return t;
}

// ---------------------------------------------------------------------------
// Classical oracles, in epsilon coordinates with the standard inner product.
// alpha_k = eps_k - eps_{k+1} (k < n), alpha_n = 2 eps_n, omega_k = eps_1 + ... + eps_k.

namespace {

std::vector<long> lambda_eps(const DominantWeight& lambda) {
  const int n = lambda.rank();
  std::vector<long> l(n, 0);
  for (int k = 0; k < n; ++k)
    for (int j = k; j < n; ++j) l[k] += lambda.coeffs[j];
  return l;
}

std::vector<long> rho_eps(int n) {
  std::vector<long> r(n);
  for (int k = 0; k < n; ++k) r[k] = n - k;
  return r;
}

std::vector<long> simple_eps(int n, int k) {  // k 0-based
  std::vector<long> a(n, 0);
  if (k < n - 1) {
    a[k] = 1;
    a[k + 1] = -1;
  } else {
    a[k] = 2;
  }
  return a;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Integer weyl_dim(const DominantWeight& lambda) {
  const int n = lambda.rank();
  auto l = lambda_eps(lambda);
  auto r = rho_eps(n);
  for (int k = 0; k < n; ++k) l[k] += r[k];
  // positive roots eps_i +- eps_j (i < j) and 2 eps_i
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= 2 * l[i];
    den *= 2 * r[i];
    for (int j = i + 1; j < n; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

Character freudenthal_multiplicities(const DominantWeight& lambda) {
  const int n = lambda.rank();
  const auto& rs = root_system(n);
  const auto lam = lambda_eps(lambda);
  const auto rho = rho_eps(n);

  auto eps_of = [&](const std::vector<int>& offset) {
    std::vector<long> mu(lam);
    for (int k = 0; k < n; ++k) {
      auto a = simple_eps(n, k);
      for (int t = 0; t < n; ++t) mu[t] -= offset[k] * a[t];
    }
    return mu;
  };
  // mu is a weight of V(lambda) iff its dominant conjugate is <= lambda.
  auto is_weight = [&](const std::vector<int>& offset) {
    auto mu = eps_of(offset);
    for (auto& x : mu) x = std::labs(x);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    long partial = 0;
    for (int k = 0; k < n; ++k) {
      partial += lam[k] - mu[k];
      if (k < n - 1 && partial < 0) return false;
    }
    return partial >= 0 && partial % 2 == 0;
  };

  std::set<std::vector<int>> weights;
  std::deque<std::vector<int>> queue{std::vector<int>(n, 0)};
  weights.insert(queue.front());
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      auto d = c;
      ++d[k];
      if (!weights.contains(d) && is_weight(d)) {
        weights.insert(d);
        queue.push_back(d);
      }
    }
  }

  std::vector<std::vector<int>> order(weights.begin(), weights.end());
  auto height = [](const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::stable_sort(order.begin(), order.end(),
                   [&](const auto& a, const auto& b) { return height(a) < height(b); });

  std::vector<std::vector<long>> roots_eps;
  std::vector<std::vector<int>> roots_offset;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    std::vector<long> a(n, 0);
    for (int k = 0; k < n; ++k) {
      auto s = simple_eps(n, k);
      for (int t = 0; t < n; ++t) a[t] += rs.expansion(i)[k] * s[t];
    }
    roots_eps.push_back(std::move(a));
    roots_offset.push_back(rs.expansion(i));
  }

  std::vector<long> lr(lam);
  for (int k = 0; k < n; ++k) lr[k] += rho[k];
  const long top = dot(lr, lr);

  std::map<std::vector<int>, Integer> mult;
  for (const auto& c : order) {
    if (height(c) == 0) {
      mult[c] = 1;
      continue;
    }
    Integer rhs = 0;
    for (std::size_t a = 0; a < roots_eps.size(); ++a) {
      std::vector<int> up(c);
      for (int step = 1;; ++step) {
        bool inside = true;
        for (int k = 0; k < n; ++k) {
          up[k] -= roots_offset[a][k];
          if (up[k] < 0) inside = false;
        }
        if (!inside) break;
        auto it = mult.find(up);
        if (it == mult.end()) break;  // weight strings are unbroken
        rhs += it->second * dot(eps_of(up), roots_eps[a]);
      }
    }
    rhs *= 2;
    auto mu = eps_of(c);
    for (int k = 0; k < n; ++k) mu[k] += rho[k];
    const long denom = top - dot(mu, mu);
    if (denom <= 0 || rhs % denom != 0) throw std::logic_error("Freudenthal recursion broke down");
    Integer m = rhs / denom;
    if (m != 0) mult[c] = m;
  }

  Character out;
  for (const auto& [c, m] : mult) out[WeightInRootLattice{c}] = m.get_ui();
  return out;
}

}  // namespace sympbw
