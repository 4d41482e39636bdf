#pragma once

// Rooted, non-duplicating expansion of connected cell sets (Redelmeier's
// method). Every connected set that contains the root and avoids the blocked
// cells is visited exactly once; no set of previously seen animals is kept.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "polyiamond/lattice.hpp"

namespace polyiamond {

/// A finite patch of a 3-regular lattice with dense indices.
template <class Cell>
class CellPatch {
 public:
  /// All cells with |x| <= radius and |y| <= radius (both orientations for triangles).
  explicit CellPatch(int radius) {
    for (int y = -radius; y <= radius; ++y) {
      for (int x = -radius; x <= radius; ++x) {
        if constexpr (std::is_same_v<Cell, TriangleCoord>) {
          add({x, y, Orientation::Left});
          add({x, y, Orientation::Right});
        } else {
          add({x, y});
        }
      }
    }
    adjacency_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const auto ns = neighbors(cells_[i]);
      for (std::size_t k = 0; k < 3; ++k) adjacency_[i][k] = index_of(ns[k]);
    }
  }

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(int index) const { return cells_[static_cast<std::size_t>(index)]; }
  const std::array<int, 3>& adjacent(int index) const { return adjacency_[static_cast<std::size_t>(index)]; }

  /// -1 when the cell lies outside the patch.
  int index_of(const Cell& c) const {
    const auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  void add(const Cell& c) {
    index_.emplace(c, static_cast<int>(cells_.size()));
    cells_.push_back(c);
  }

  std::vector<Cell> cells_;
  std::vector<std::array<int, 3>> adjacency_;
  std::unordered_map<Cell, int> index_;
};

/// Deterministic partition of the expansion tree between workers: nodes of
/// size `depth` are dealt round-robin, shallower nodes belong to worker 0.
struct WorkSplit {
  unsigned workers = 1;
  unsigned index = 0;
  int depth = 0;
};

/// Runs the expansion from `root`. `blocked` marks cells that may never be
/// added (its size must equal the patch size). `on_animal(cells)` is called
/// once per visited animal with the cell indices in insertion order.
template <class Cell, class OnAnimal>
void expand_rooted(const CellPatch<Cell>& patch, int root, std::vector<std::uint8_t> blocked, int max_size,
                   const WorkSplit& split, OnAnimal&& on_animal) {
  if (max_size <= 0) return;
  std::vector<std::uint8_t>& seen = blocked;
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(max_size) + 1);
  for (auto& level : levels) level.resize(3 * static_cast<std::size_t>(max_size) + 4);
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(max_size));
  unsigned long long task = 0;
  const bool splitting = split.workers > 1 && split.depth > 0;

  auto recurse = [&](auto&& self, int size, const int* untried, int count) -> void {
    std::vector<int>& next = levels[static_cast<std::size_t>(size)];
    for (int i = 0; i < count; ++i) {
      const int v = untried[i];
      const int grown = size + 1;
      bool report = true;
      if (splitting) {
        if (grown == split.depth) {
          if (task++ % split.workers != split.index) continue;
        } else if (grown < split.depth) {
          report = split.index == 0;
        }
      }
      current.push_back(v);
      if (report) on_animal(std::span<const int>(current));
      if (grown < max_size) {
        int n = 0;
        for (int j = i + 1; j < count; ++j) next[static_cast<std::size_t>(n++)] = untried[j];
        const int inherited = n;
        for (const int u : patch.adjacent(v)) {
          if (u >= 0 && !seen[static_cast<std::size_t>(u)]) {
            seen[static_cast<std::size_t>(u)] = 1;
            next[static_cast<std::size_t>(n++)] = u;
          }
        }
        self(self, grown, next.data(), n);
        for (int j = inherited; j < n; ++j) seen[static_cast<std::size_t>(next[static_cast<std::size_t>(j)])] = 0;
      }
      current.pop_back();
    }
  };

  seen[static_cast<std::size_t>(root)] = 1;
  const int start[1] = {root};
  recurse(recurse, 0, start, 1);
}

/// Number of animals of each size 0..max_size reachable from `root`,
/// split across `workers` threads. Results do not depend on `workers`.
template <class Cell>
std::vector<unsigned long long> count_rooted(const CellPatch<Cell>& patch, int root,
                                             const std::vector<std::uint8_t>& blocked, int max_size,
                                             unsigned workers) {
  if (workers == 0) workers = 1;
  const int split_depth = std::min(max_size, 6);
  std::vector<std::vector<unsigned long long>> partial(workers,
                                                       std::vector<unsigned long long>(max_size + 1, 0));
  auto work = [&](unsigned index) {
    auto& counts = partial[index];
    expand_rooted(patch, root, blocked, max_size, WorkSplit{workers, index, split_depth},
                  [&counts](std::span<const int> cells) { ++counts[cells.size()]; });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::vector<unsigned long long> total(static_cast<std::size_t>(max_size) + 1, 0);
  for (const auto& counts : partial)
    for (std::size_t n = 0; n < counts.size(); ++n) total[n] += counts[n];
  return total;
}

}  // namespace polyiamond
