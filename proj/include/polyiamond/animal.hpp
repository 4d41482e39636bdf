#pragma once

#include <algorithm>
#include <span>
#include <unordered_set>
#include <vector>

#include "polyiamond/errors.hpp"
#include "polyiamond/lattice.hpp"

namespace polyiamond {

template <class Cell>
struct CellTraits;

template <>
struct CellTraits<VertexCoord> {
  /// Class-preserving translation moving `anchor` onto the class anchor.
  static VertexOffset canonical_shift(VertexCoord anchor) {
    return class_anchor(vertex_class(anchor)) - anchor;
  }
  static VertexCoord translate(VertexCoord c, VertexOffset d) { return c + d; }
};

template <>
struct CellTraits<TriangleCoord> {
  static VertexOffset canonical_shift(TriangleCoord anchor) { return {-anchor.x, -anchor.y}; }
  static TriangleCoord translate(TriangleCoord c, VertexOffset d) { return {c.x + d.x, c.y + d.y, c.orient}; }
};

template <class Cell>
bool is_connected(std::span<const Cell> cells) {
  if (cells.empty()) return false;
  std::unordered_set<Cell> pending(cells.begin(), cells.end());
  std::vector<Cell> stack{cells.front()};
  pending.erase(cells.front());
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (const Cell& n : neighbors(c)) {
      if (pending.erase(n)) stack.push_back(n);
    }
  }
  return pending.empty();
}

template <class Cell>
Cell anchor_of(std::span<const Cell> cells) {
  return *std::min_element(cells.begin(), cells.end(),
                           [](const Cell& a, const Cell& b) { return anchor_key(a) < anchor_key(b); });
}

/// A connected, nonempty cell set stored in canonical translated form.
/// Two polyiamonds compare equal exactly when one is a translate of the other.
template <class Cell>
class Polyiamond {
 public:
  static Polyiamond from_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
      throw InputError("polyiamond cells must be distinct");
    if (!is_connected<Cell>(cells)) throw InputError("polyiamond must be nonempty and connected");
    const VertexOffset shift = CellTraits<Cell>::canonical_shift(anchor_of<Cell>(cells));
    for (Cell& c : cells) c = CellTraits<Cell>::translate(c, shift);
    std::sort(cells.begin(), cells.end());
    return Polyiamond(std::move(cells));
  }

  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  Cell anchor() const { return anchor_of<Cell>(cells_); }
  bool contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  friend auto operator<=>(const Polyiamond&, const Polyiamond&) = default;

 private:
  explicit Polyiamond(std::vector<Cell> cells) : cells_(std::move(cells)) {}
  std::vector<Cell> cells_;
};

using HexPolyiamond = Polyiamond<VertexCoord>;
using TrianglePolyiamond = Polyiamond<TriangleCoord>;

}  // namespace polyiamond
