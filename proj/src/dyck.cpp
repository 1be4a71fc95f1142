#include "sympbw/dyck.hpp"

#include <algorithm>
#include <functional>

namespace sympbw {

bool DyckPath::contains(std::size_t root_index) const {
  return std::find(indices.begin(), indices.end(), root_index) != indices.end();
}

std::optional<int> DyckPath::column_maximum(const RootSystem& rs, int row) const {
  std::optional<int> best;
  for (auto idx : indices) {
    if (rs.row_of(idx) == row) best = std::max(best.value_or(-1), rs.col_of(idx));
  }
  return best;
}

namespace {

bool valid_end(const RootSystem& rs, std::size_t idx) { return rs.is_simple(idx) || rs.is_long_end(idx); }

}  // namespace

std::vector<DyckPath> enumerate_paths(int rank) {
  const auto& rs = root_system(rank);
  std::vector<DyckPath> out;
  std::vector<std::size_t> stack;

  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    stack.push_back(idx);
    if (valid_end(rs, idx)) {
      DyckPath p;
      p.indices = stack;
      for (auto i : stack) p.roots.push_back(rs.root(i));
      out.push_back(std::move(p));
    }
    for (auto next : rs.successors(idx)) walk(next);
    stack.pop_back();
  };
  for (int i = 1; i <= rank; ++i) walk(rs.simple(i));

  auto key = [&](const DyckPath& p) {
    std::vector<std::pair<int, int>> k;
    for (auto idx : p.indices) k.emplace_back(rs.row_of(idx), rs.col_of(idx));
    return k;
  };
  std::stable_sort(out.begin(), out.end(), [&](const DyckPath& a, const DyckPath& b) {
    if (a.start_row() != b.start_row()) return a.start_row() < b.start_row();
    return key(a) < key(b);
  });
  return out;
}

DyckCheck is_dyck_path(const RootSystem& rs, std::span<const PositiveRoot> seq) {
  DyckCheck result;
  auto fail = [&](char clause, std::string why) {
    result.ok = false;
    result.clause = clause;
    result.reason = std::move(why);
    return result;
  };
  if (seq.empty()) return fail('a', "empty sequence");

  std::vector<std::size_t> idx;
  for (const auto& r : seq) {
    auto i = rs.find(r);
    if (!i) return fail('a', r.label() + " is not a positive root");
    idx.push_back(*i);
  }
  if (!rs.is_simple(idx.front())) return fail('a', seq.front().label() + " is not simple");
  if (!valid_end(rs, idx.back())) {
    return fail('b', seq.back().label() + " is neither simple nor of the form alpha_{j,jbar}");
  }
  for (std::size_t s = 0; s + 1 < idx.size(); ++s) {
    auto next = rs.successors(idx[s]);
    if (std::find(next.begin(), next.end(), idx[s + 1]) == next.end()) {
      return fail('c', seq[s + 1].label() + " is not a successor of " + seq[s].label());
    }
  }
  return result;
}

DyckPath make_path(const RootSystem& rs, std::span<const PositiveRoot> seq) {
  auto check = is_dyck_path(rs, seq);
  if (!check.ok) throw InvalidArgument("not a Dyck path: " + check.reason);
  DyckPath p;
  for (const auto& r : seq) {
    p.roots.push_back(r);
    p.indices.push_back(rs.index_of(r));
  }
  return p;
}

}  // namespace sympbw
