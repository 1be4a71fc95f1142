#include "sympbw/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace sympbw {

namespace {

std::vector<std::vector<int>> subsets_of_size(int universe, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x < universe; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Action of a 2n x 2n matrix on Lambda^size by the Leibniz rule.
std::vector<std::vector<std::pair<std::uint32_t, long>>> wedge_action(const IntMatrix& m,
                                                                       const std::vector<std::vector<int>>& subsets,
                                                                       const std::map<std::vector<int>, std::uint32_t>& index) {
  std::vector<std::vector<std::pair<std::uint32_t, long>>> table(subsets.size());
  const int dim = m.dim();
  for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
    const auto& S = subsets[idx];
    std::map<std::uint32_t, long> acc;
    for (int j : S) {
      for (int r = 0; r < dim; ++r) {
        const long long c = m(r, j);
        if (c == 0) continue;
        if (r == j) {
          acc[static_cast<std::uint32_t>(idx)] += static_cast<long>(c);
          continue;
        }
        if (std::find(S.begin(), S.end(), r) != S.end()) continue;
        std::vector<int> T;
        int between = 0;
        for (int x : S) {
          if (x == j) continue;
          T.push_back(x);
          if (x > std::min(j, r) && x < std::max(j, r)) ++between;
        }
        T.push_back(r);
        std::sort(T.begin(), T.end());
        const long sign = (between % 2 == 0) ? 1 : -1;
        acc[index.at(T)] += sign * static_cast<long>(c);
      }
    }
    for (const auto& [t, c] : acc)
      if (c != 0) table[idx].emplace_back(t, c);
  }
  return table;
}

WeightInRootLattice shifted(const WeightInRootLattice& w, const std::vector<int>& expansion) {
  WeightInRootLattice out = w;
  for (std::size_t k = 0; k < expansion.size(); ++k) out.coeffs[k] += expansion[k];
  return out;
}

std::vector<std::size_t> application_order(std::size_t count, PbwOrder order) {
  std::vector<std::size_t> seq(count);
  for (std::size_t k = 0; k < count; ++k) seq[k] = (order == PbwOrder::descending) ? k : count - 1 - k;
  return seq;
}

}  // namespace

RepresentationSpace::RepresentationSpace(const DominantWeight& lambda, std::size_t cap) : lambda_(lambda) {
  const int n = lambda.rank();
  const auto& cr = chevalley_realization(n);
  const std::size_t roots = cr.roots().size();
  lowering_.resize(static_cast<std::size_t>(n) + 1);
  raising_.resize(static_cast<std::size_t>(n) + 1);

  for (int i = 1; i <= n; ++i) {
    const int m = lambda.coeffs[static_cast<std::size_t>(i - 1)];
    if (m == 0) continue;
    const auto subsets = subsets_of_size(2 * n, i);
    for (int copy = 0; copy < m; ++copy) {
      const auto extent = static_cast<std::uint32_t>(subsets.size());
      if (ambient_dim_ > cap / extent)
        throw SizeLimitExceeded("ambient dimension of V(lambda) exceeds cap " + std::to_string(cap));
      factors_.push_back({i, static_cast<std::uint32_t>(ambient_dim_), extent});
      ambient_dim_ *= extent;
    }
    std::map<std::vector<int>, std::uint32_t> index;
    for (std::size_t k = 0; k < subsets.size(); ++k) index[subsets[k]] = static_cast<std::uint32_t>(k);
    auto& low = lowering_[static_cast<std::size_t>(i)];
    auto& high = raising_[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < roots; ++a) {
      low.push_back(wedge_action(cr.lowering(a), subsets, index));
      high.push_back(wedge_action(cr.raising(a), subsets, index));
    }
  }
}

SparseVector RepresentationSpace::highest_vector() const { return SparseVector({{0u, Rational(1)}}); }

SparseVector RepresentationSpace::act(const std::vector<WedgeTable>& tables, std::size_t root,
                                      const SparseVector& v) const {
  if (root >= static_cast<std::size_t>(rank()) * static_cast<std::size_t>(rank()))
    throw InvalidArgument("root index out of range");
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [idx, c] : v) {
    for (const auto& f : factors_) {
      const std::uint32_t digit = (idx / f.stride) % f.extent;
      const auto base = idx - digit * f.stride;
      for (const auto& [t, k] : tables[static_cast<std::size_t>(f.size)][root][digit])
        acc[base + t * f.stride] += c * Rational(k);
    }
  }
  return SparseVector::from_map(acc);
}

SparseVector RepresentationSpace::apply(std::size_t root, const SparseVector& v) const {
  return act(lowering_, root, v);
}

SparseVector RepresentationSpace::apply_raising(std::size_t root, const SparseVector& v) const {
  return act(raising_, root, v);
}

RepresentationSpace build_module(const DominantWeight& lambda, std::size_t cap) {
  RepresentationSpace M(lambda, cap);
  const auto& rs = root_system(lambda.rank());
  std::map<WeightInRootLattice, Echelon> spans;

  const WeightInRootLattice top{std::vector<int>(static_cast<std::size_t>(lambda.rank()), 0)};
  const auto v0 = M.highest_vector();
  spans[top].insert(v0);
  M.basis_.push_back(v0);
  M.weights_.push_back(top);
  M.levels_.push_back(0);

  std::size_t begin = 0;
  for (int level = 0;; ++level) {
    const std::size_t end = M.basis_.size();
    if (begin == end) break;
    for (std::size_t b = begin; b < end; ++b) {
      for (std::size_t a = 0; a < rs.size(); ++a) {
        auto w = M.apply(a, M.basis_[b]);
        if (w.empty()) continue;
        auto off = shifted(M.weights_[b], rs.expansion(a));
        if (!spans[off].insert(w)) continue;
        M.basis_.push_back(std::move(w));
        M.weights_.push_back(std::move(off));
        M.levels_.push_back(level + 1);
      }
    }
    begin = end;
  }
  return M;
}

GradedDimensionTable pbw_filtration_dims(const RepresentationSpace& module, PbwOrder order) {
  const auto& rs = root_system(module.rank());
  const auto seq = application_order(rs.size(), order);
  GradedDimensionTable table;
  std::map<WeightInRootLattice, Echelon> spans;

  const WeightInRootLattice top{std::vector<int>(static_cast<std::size_t>(module.rank()), 0)};
  spans[top].insert(module.highest_vector());
  table.add(top, 0);

  for (int degree = 1;; ++degree) {
    bool grew = false;
    // Products of exactly `degree` factors, applied along `seq`; prefixes are shared.
    std::function<void(std::size_t, const SparseVector&, const WeightInRootLattice&, int)> rec =
        [&](std::size_t pos, const SparseVector& v, const WeightInRootLattice& off, int remaining) {
          if (remaining == 0) {
            if (spans[off].insert(v)) {
              table.add(off, degree);
              grew = true;
            }
            return;
          }
          if (pos == seq.size()) return;
          const std::size_t a = seq[pos];
          SparseVector cur = v;
          WeightInRootLattice w = off;
          for (int e = 0; e <= remaining; ++e) {
            if (e > 0) {
              cur = module.apply(a, cur);
              if (cur.empty()) return;
              w = shifted(w, rs.expansion(a));
            }
            if (pos + 1 == seq.size() && e < remaining) continue;
            rec(pos + 1, cur, w, remaining - e);
          }
        };
    rec(0, module.highest_vector(), top, degree);
    if (!grew) break;
  }
  return table;
}

GradedDimensionTable pbw_filtration_dims(const DominantWeight& lambda, std::size_t cap) {
  return pbw_filtration_dims(RepresentationSpace(lambda, cap));
}

SparseVector ordered_monomial(const RepresentationSpace& module, const MultiExponent& s, PbwOrder order) {
  const auto& rs = root_system(module.rank());
  if (s.size() != rs.size()) throw InvalidArgument("exponent length does not match rank");
  SparseVector v = module.highest_vector();
  for (std::size_t a : application_order(rs.size(), order)) {
    for (int e = 0; e < s[a]; ++e) {
      v = module.apply(a, v);
      if (v.empty()) return v;
    }
  }
  return v;
}

std::size_t ordered_monomial_rank(const RepresentationSpace& module, const std::vector<MultiExponent>& points,
                                  PbwOrder order) {
  Echelon span;
  for (const auto& s : points) span.insert(ordered_monomial(module, s, order));
  return span.rank();
}

std::map<std::uint32_t, Rational> GradedAction::apply(std::size_t root,
                                                      const std::map<std::uint32_t, Rational>& v) const {
  const auto& F = f.at(root);
  std::map<std::uint32_t, Rational> out;
  for (const auto& [j, c] : v) {
    for (const auto& [t, k] : F.columns.at(j)) out[t] += c * k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::uint32_t, Rational> GradedAction::monomial(const MultiExponent& s) const {
  std::map<std::uint32_t, Rational> v{{0u, Rational(1)}};
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (int e = 0; e < s[a] && !v.empty(); ++e) v = apply(a, v);
  }
  return v;
}

GradedAction graded_action(const RepresentationSpace& module) {
  if (module.dim() == 0) throw InvalidArgument("graded_action needs a module filled by build_module");
  const auto& rs = root_system(module.rank());
  const auto& basis = module.basis();
  const auto tag0 = static_cast<std::uint32_t>(module.ambient_dim());

  // Per weight: the basis vectors of that weight, augmented by a tag coordinate,
  // so reducing w leaves minus its coordinates in the tags.
  std::map<WeightInRootLattice, Echelon> augmented;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    auto entries = basis[b].entries();
    entries.emplace_back(tag0 + static_cast<std::uint32_t>(b), Rational(1));
    augmented[module.weight_tags()[b]].insert(SparseVector(std::move(entries)));
  }

  GradedAction G;
  G.dim = basis.size();
  G.levels = module.level_tags();
  G.weights = module.weight_tags();
  G.f.resize(rs.size());
  for (std::size_t a = 0; a < rs.size(); ++a) {
    auto& columns = G.f[a].columns;
    columns.resize(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto w = module.apply(a, basis[b]);
      if (w.empty()) continue;
      const auto off = shifted(module.weight_tags()[b], rs.expansion(a));
      const auto it = augmented.find(off);
      if (it == augmented.end()) throw std::logic_error("f_alpha leaves the module weights");
      const auto residual = it->second.reduce(w);
      for (const auto& [idx, c] : residual) {
        if (idx < tag0) throw std::logic_error("f_alpha leaves the span of the module basis");
        const std::uint32_t target = idx - tag0;
        if (module.level_tags()[target] == module.level_tags()[b] + 1) columns[b][target] = -c;
        else if (module.level_tags()[target] > module.level_tags()[b] + 1)
          throw std::logic_error("f_alpha raises the PBW level by more than one");
      }
    }
  }
  return G;
}

GradedDimensionTable tensor_cartan_dims(const DominantWeight& lambda, const DominantWeight& mu, std::size_t cap) {
  if (lambda.rank() != mu.rank()) throw InvalidArgument("tensor_cartan_dims needs weights of equal rank");
  const auto A = graded_action(build_module(lambda, cap));
  const auto B = graded_action(build_module(mu, cap));
  if (A.dim * B.dim > cap) throw SizeLimitExceeded("graded tensor product exceeds cap " + std::to_string(cap));
  const auto& rs = root_system(lambda.rank());
  const auto dB = static_cast<std::uint32_t>(B.dim);

  using Vec = std::map<std::uint32_t, Rational>;
  auto act = [&](std::size_t a, const Vec& x) {
    Vec out;
    for (const auto& [idx, c] : x) {
      const std::uint32_t i = idx / dB;
      const std::uint32_t j = idx % dB;
      for (const auto& [t, k] : A.f[a].columns[i]) out[t * dB + j] += c * k;
      for (const auto& [t, k] : B.f[a].columns[j]) out[i * dB + t] += c * k;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };

  GradedDimensionTable table;
  const WeightInRootLattice top{std::vector<int>(static_cast<std::size_t>(lambda.rank()), 0)};
  table.add(top, 0);
  std::vector<std::pair<WeightInRootLattice, Vec>> frontier{{top, Vec{{0u, Rational(1)}}}};
  for (int degree = 1; !frontier.empty(); ++degree) {
    std::map<WeightInRootLattice, Echelon> spans;
    std::vector<std::pair<WeightInRootLattice, Vec>> next;
    for (const auto& [off, x] : frontier) {
      for (std::size_t a = 0; a < rs.size(); ++a) {
        auto y = act(a, x);
        if (y.empty()) continue;
        auto w = shifted(off, rs.expansion(a));
        if (!spans[w].insert(SparseVector::from_map(y))) continue;
        table.add(w, degree);
        next.emplace_back(std::move(w), std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return table;
}

}  // namespace sympbw
