#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympbw/rootsys.hpp"

namespace sympbw {

/// Sequence of positive roots from a simple root to alpha_j or alpha_{j,jbar},
/// moving right or down in the triangle at each step.
struct DyckPath {
  std::vector<PositiveRoot> roots;
  std::vector<std::size_t> indices;  // root indices in reading order, parallel to roots

  [[nodiscard]] std::size_t length() const { return roots.size(); }
  [[nodiscard]] int start_row() const { return roots.front().row; }
  [[nodiscard]] const PositiveRoot& end() const { return roots.back(); }
  [[nodiscard]] bool contains(std::size_t root_index) const;
  /// Largest column (J position) used in `row`, or nullopt if the row is not visited.
  [[nodiscard]] std::optional<int> column_maximum(const RootSystem& rs, int row) const;

  bool operator==(const DyckPath& other) const { return indices == other.indices; }
};

struct DyckCheck {
  bool ok = true;
  char clause = 0;  // 'a', 'b', 'c', or 0 when ok
  std::string reason;
};

/// Every path for the given rank, sorted by start row then by the sequence
/// of (row, column position) pairs.
std::vector<DyckPath> enumerate_paths(int rank);

DyckCheck is_dyck_path(const RootSystem& rs, std::span<const PositiveRoot> seq);

DyckPath make_path(const RootSystem& rs, std::span<const PositiveRoot> seq);

}  // namespace sympbw
