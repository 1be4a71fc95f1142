#include "sympbw/rootsys.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

namespace sympbw {

namespace {

void require_rank(int rank) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1, got " + std::to_string(rank));
}

}  // namespace

// ---------------------------------------------------------------------------
// BarredIndex

BarredIndex::BarredIndex(int value, bool barred, int rank) : value_(value), barred_(barred) {
  require_rank(rank);
  if (value < 1 || value > rank) {
    throw InvalidArgument("alphabet value " + std::to_string(value) + " outside 1.." +
                          std::to_string(rank));
  }
  if (barred_ && value_ == rank) barred_ = false;
}

int BarredIndex::position(int rank) const { return barred_ ? 2 * rank - 1 - value_ : value_ - 1; }

BarredIndex BarredIndex::from_position(int position, int rank) {
  require_rank(rank);
  if (position < 0 || position > 2 * rank - 2) {
    throw InvalidArgument("alphabet position " + std::to_string(position) + " out of range");
  }
  if (position < rank) return BarredIndex(position + 1, false, rank);
  return BarredIndex(2 * rank - 1 - position, true, rank);
}

std::optional<BarredIndex> BarredIndex::successor(int rank) const {
  const int p = position(rank);
  if (p + 1 > 2 * rank - 2) return std::nullopt;
  return from_position(p + 1, rank);
}

std::string BarredIndex::label() const {
  return barred_ ? std::to_string(value_) + "bar" : std::to_string(value_);
}

std::strong_ordering BarredIndex::operator<=>(const BarredIndex& other) const {
  if (barred_ != other.barred_) return barred_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!barred_) return value_ <=> other.value_;
  return other.value_ <=> value_;
}

std::string PositiveRoot::label() const { return "a(" + std::to_string(row) + "," + col.label() + ")"; }

// ---------------------------------------------------------------------------
// DominantWeight

DominantWeight::DominantWeight(std::vector<int> m) : coeffs(std::move(m)) {
  if (coeffs.empty()) throw InvalidArgument("dominant weight must have rank >= 1");
  for (int c : coeffs) {
    if (c < 0) throw InvalidArgument("dominant weight coefficients must be non-negative");
  }
}

DominantWeight DominantWeight::zero(int rank) {
  require_rank(rank);
  return DominantWeight(std::vector<int>(rank, 0));
}

DominantWeight DominantWeight::fundamental(int rank, int i) {
  require_rank(rank);
  if (i < 1 || i > rank) throw InvalidArgument("fundamental weight index out of range");
  std::vector<int> m(rank, 0);
  m[i - 1] = 1;
  return DominantWeight(std::move(m));
}

int DominantWeight::size() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

int DominantWeight::minimal_support() const {
  for (int i = 0; i < rank(); ++i) {
    if (coeffs[i] != 0) return i + 1;
  }
  return 0;
}

DominantWeight DominantWeight::operator+(const DominantWeight& other) const {
  if (rank() != other.rank()) throw InvalidArgument("adding weights of different rank");
  std::vector<int> m(coeffs);
  for (int i = 0; i < rank(); ++i) m[i] += other.coeffs[i];
  return DominantWeight(std::move(m));
}

// ---------------------------------------------------------------------------
// RootSystem

std::vector<PositiveRoot> positive_roots(int rank) {
  require_rank(rank);
  std::vector<PositiveRoot> out;
  out.reserve(static_cast<std::size_t>(rank) * rank);
  for (int i = 1; i <= rank; ++i) {
    for (int p = i - 1; p <= 2 * rank - 1 - i; ++p) {
      out.push_back(PositiveRoot{i, BarredIndex::from_position(p, rank)});
    }
  }
  return out;
}

RootSystem::RootSystem(int rank) : n_(rank), roots_(positive_roots(rank)) {
  grid_.assign(n_, std::vector<int>(2 * n_ - 1, -1));
  for (std::size_t idx = 0; idx < roots_.size(); ++idx) {
    const auto& r = roots_[idx];
    const int p = r.col.position(n_);
    col_pos_.push_back(p);
    grid_[r.row - 1][p] = static_cast<int>(idx);

    std::vector<int> c(n_, 0);
    if (!r.col.barred()) {
      for (int k = r.row; k <= r.col.value(); ++k) c[k - 1] = 1;
    } else {
      for (int k = r.row; k <= n_; ++k) c[k - 1] += 1;
      for (int k = r.col.value(); k <= n_ - 1; ++k) c[k - 1] += 1;
    }
    by_expansion_.emplace(c, idx);
    expansion_.push_back(std::move(c));
  }
}

std::optional<std::size_t> RootSystem::find(int row, int col_position) const {
  if (row < 1 || row > n_ || col_position < 0 || col_position > 2 * n_ - 2) return std::nullopt;
  const int idx = grid_[row - 1][col_position];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::optional<std::size_t> RootSystem::find(const PositiveRoot& root) const {
  return find(root.row, root.col.position(n_));
}

std::size_t RootSystem::index_of(const PositiveRoot& root) const {
  auto idx = find(root);
  if (!idx) throw InvalidArgument("not a positive root of C_" + std::to_string(n_) + ": " + root.label());
  return *idx;
}

std::size_t RootSystem::index_of(int row, int col_position) const {
  auto idx = find(row, col_position);
  if (!idx) throw InvalidArgument("no positive root at row " + std::to_string(row));
  return *idx;
}

std::optional<std::size_t> RootSystem::find_by_expansion(const std::vector<int>& coeffs) const {
  auto it = by_expansion_.find(coeffs);
  if (it == by_expansion_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::simple(int k) const { return index_of(k, k - 1); }

bool RootSystem::is_simple(std::size_t index) const { return col_pos_[index] == roots_[index].row - 1; }

bool RootSystem::is_long_end(std::size_t index) const {
  return col_pos_[index] == 2 * n_ - 1 - roots_[index].row;
}

std::vector<std::size_t> RootSystem::successors(std::size_t index) const {
  std::vector<std::size_t> out;
  const int r = roots_[index].row;
  const int p = col_pos_[index];
  if (auto right = find(r, p + 1)) out.push_back(*right);
  if (auto down = find(r + 1, p)) out.push_back(*down);
  return out;
}

std::optional<std::size_t> RootSystem::difference(std::size_t beta, std::size_t alpha) const {
  std::vector<int> c(expansion_[beta]);
  for (int k = 0; k < n_; ++k) {
    c[k] -= expansion_[alpha][k];
    if (c[k] < 0) return std::nullopt;
  }
  return find_by_expansion(c);
}

std::vector<PositiveRoot> root_successors(const RootSystem& rs, const PositiveRoot& alpha) {
  std::vector<PositiveRoot> out;
  for (auto idx : rs.successors(rs.index_of(alpha))) out.push_back(rs.root(idx));
  return out;
}

int path_bound(const DominantWeight& lambda, const RootSystem& rs, std::size_t start, std::size_t end) {
  if (lambda.rank() != rs.rank()) throw InvalidArgument("weight rank does not match root system");
  if (!rs.is_simple(start)) throw InvalidArgument("path must start at a simple root");
  const int i = rs.row_of(start);
  const int j = rs.row_of(end);
  if (j < i) throw InvalidArgument("path endpoint lies above its start");
  int last;
  if (rs.is_simple(end)) {
    last = j;  // alpha_n is also alpha_{n,nbar}; both give m_i + ... + m_n
  } else if (rs.is_long_end(end)) {
    last = rs.rank();
  } else {
    throw InvalidArgument("path must end at a simple root or at alpha_{j,jbar}");
  }
  int sum = 0;
  for (int k = i; k <= last; ++k) sum += lambda.coeffs[k - 1];
  return sum;
}

int path_bound(const DominantWeight& lambda, const PositiveRoot& start, const PositiveRoot& end) {
  const auto& rs = root_system(lambda.rank());
  return path_bound(lambda, rs, rs.index_of(start), rs.index_of(end));
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix IntMatrix::unit(int dim, int r, int c) {
  IntMatrix m(dim);
  m(r, c) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](long long x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix p(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const long long x = (*this)(r, k);
      if (x == 0) continue;
      for (int c = 0; c < dim_; ++c) p(r, c) += x * o(k, c);
    }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix s(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix s(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

IntMatrix IntMatrix::operator*(long long s) const {
  IntMatrix m(*this);
  for (auto& x : m.a_) x *= s;
  return m;
}

IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) { return x * y - y * x; }

std::optional<Rational> proportionality(const IntMatrix& x, const IntMatrix& y) {
  if (y.is_zero()) return x.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  Rational c;
  bool found = false;
  for (int r = 0; r < y.dim() && !found; ++r)
    for (int col = 0; col < y.dim() && !found; ++col)
      if (y(r, col) != 0) {
        c = Rational(Integer(static_cast<long>(x(r, col))), Integer(static_cast<long>(y(r, col))));
        c.canonicalize();
        found = true;
      }
  for (int r = 0; r < y.dim(); ++r)
    for (int col = 0; col < y.dim(); ++col)
      if (Rational(static_cast<long>(x(r, col))) != c * static_cast<long>(y(r, col))) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------
// ChevalleyRealization

ChevalleyRealization::ChevalleyRealization(int rank) : n_(rank), rs_(rank), form_(2 * rank) {
  const int d = 2 * n_;
  for (int k = 0; k < d; ++k) form_(k, d - 1 - k) = k < n_ ? 1 : -1;

  // X + S X^T S lies in sp_{2n} for every X (S^{-1} = -S).
  auto project = [&](const IntMatrix& x) { return x + form_ * x.transpose() * form_; };

  for (int k = 1; k <= n_; ++k) {
    IntMatrix ek, fk;
    if (k < n_) {
      ek = project(IntMatrix::unit(d, k - 1, k));
      fk = project(IntMatrix::unit(d, k, k - 1));
    } else {
      ek = IntMatrix::unit(d, n_ - 1, n_);
      fk = IntMatrix::unit(d, n_, n_ - 1);
    }
    h_.push_back(bracket(ek, fk));
    e_.push_back(std::move(ek));
    f_.push_back(std::move(fk));
  }

  // Root vectors by increasing height: f_{gamma + alpha_k} = [f_k, f_gamma]
  // with k the smallest index for which gamma is a positive root.
  std::vector<std::size_t> order(rs_.size());
  std::iota(order.begin(), order.end(), 0);
  auto height = [&](std::size_t i) {
    const auto& c = rs_.expansion(i);
    return std::accumulate(c.begin(), c.end(), 0);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return height(a) < height(b); });

  raise_.assign(rs_.size(), IntMatrix());
  lower_.assign(rs_.size(), IntMatrix());
  for (std::size_t beta : order) {
    if (rs_.is_simple(beta)) {
      const int k = rs_.row_of(beta);
      raise_[beta] = e_[k - 1];
      lower_[beta] = f_[k - 1];
      continue;
    }
    for (int k = 1; k <= n_; ++k) {
      auto gamma = rs_.difference(beta, rs_.simple(k));
      if (!gamma) continue;
      raise_[beta] = bracket(e_[k - 1], raise_[*gamma]);
      lower_[beta] = bracket(f_[k - 1], lower_[*gamma]);
      break;
    }
  }

  adjoint_.assign(rs_.size(), std::vector<Rational>(rs_.size(), 0));
  for (std::size_t gamma = 0; gamma < rs_.size(); ++gamma) {
    for (std::size_t beta = 0; beta < rs_.size(); ++beta) {
      auto delta = rs_.difference(beta, gamma);
      if (!delta) continue;
      auto c = proportionality(bracket(raise_[gamma], lower_[beta]), lower_[*delta]);
      if (!c || *c == 0) {
        throw std::logic_error("root vector bracket is not a nonzero multiple of a root vector");
      }
      adjoint_[gamma][beta] = *c;
    }
  }
}

long long ChevalleyRealization::ad_coeff(int k, std::size_t beta) const {
  const Rational& c = adjoint_coeff(rs_.simple(k), beta);
  if (c.get_den() != 1) throw std::logic_error("non-integral simple bracket constant");
  return c.get_num().get_si();
}

const Rational& ChevalleyRealization::adjoint_coeff(std::size_t gamma, std::size_t beta) const {
  return adjoint_.at(gamma).at(beta);
}

bool ChevalleyRealization::in_algebra(const IntMatrix& x) const {
  return (x.transpose() * form_ + form_ * x).is_zero();
}

IntMatrix ChevalleyRealization::cartan(const std::vector<long long>& a) const {
  IntMatrix m(2 * n_);
  for (int i = 0; i < n_; ++i) {
    m(i, i) = a.at(i);
    m(2 * n_ - 1 - i, 2 * n_ - 1 - i) = -a.at(i);
  }
  return m;
}

namespace {

template <class T>
const T& cached(int rank) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<T>> cache;
  require_rank(rank);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_unique<T>(rank);
  return *slot;
}

}  // namespace

const ChevalleyRealization& chevalley_realization(int rank) { return cached<ChevalleyRealization>(rank); }
const RootSystem& root_system(int rank) { return cached<RootSystem>(rank); }

std::vector<std::vector<int>> cartan_matrix(int rank) {
  require_rank(rank);
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int k = 0; k < rank; ++k) {
    a[k][k] = 2;
    if (k + 1 < rank) {
      a[k][k + 1] = -1;
      a[k + 1][k] = -1;
    }
  }
  if (rank >= 2) a[rank - 2][rank - 1] = -2;
  return a;
}

}  // namespace sympbw
