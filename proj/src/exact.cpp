#include "sympbw/exact.hpp"

#include <algorithm>

namespace sympbw {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (e.second == 0) continue;
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
      if (entries_.back().second == 0) entries_.pop_back();
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

SparseVector SparseVector::from_map(const std::map<std::uint32_t, Rational>& m) {
  SparseVector v;
  v.entries_.reserve(m.size());
  for (const auto& [k, c] : m) {
    if (c != 0) v.entries_.emplace_back(k, c);
  }
  return v;
}

Rational SparseVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint32_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

SparseVector Echelon::reduce(const SparseVector& v) const {
  if (rows_.empty()) return v;
  std::map<std::uint32_t, Rational> work;
  for (const auto& [k, c] : v) work.emplace(k, c);

  auto it = work.begin();
  while (it != work.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::uint32_t pivot = it->first;
    const Rational factor = it->second;
    work.erase(it);
    for (const auto& [k, c] : row->second) {
      if (k == pivot) continue;
      auto [slot, fresh] = work.try_emplace(k, 0);
      slot->second -= factor * c;
      if (slot->second == 0) work.erase(slot);
    }
    it = work.upper_bound(pivot);
  }
  return SparseVector::from_map(work);
}

bool Echelon::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Rational lead = r.entries().front().second;
  std::vector<SparseVector::Entry> scaled;
  scaled.reserve(r.size());
  for (const auto& [k, c] : r) scaled.emplace_back(k, c / lead);
  const std::uint32_t pivot = scaled.front().first;
  rows_.emplace(pivot, SparseVector(std::move(scaled)));
  return true;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace sympbw
