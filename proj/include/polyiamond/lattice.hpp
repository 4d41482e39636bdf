#pragma once

// Coordinates for the triangular lattice and its honeycomb dual.
//
// Honeycomb vertices use a brick-wall embedding: every vertex (x, y) has
// East/West neighbours in its row, plus a South neighbour when x + y is even
// (class Down) or a North neighbour when x + y is odd (class Up).
//
// Triangles are addressed by the rhombus (x, y) they belong to and an
// orientation. Left(x, y) touches Right(x, y), Right(x - 1, y), Right(x, y - 1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <tuple>

namespace polyiamond {

enum class Orientation : std::uint8_t { Left = 0, Right = 1 };
enum class VertexClass : std::uint8_t { Down = 0, Up = 1 };

constexpr std::string_view to_string(VertexClass c) { return c == VertexClass::Down ? "down" : "up"; }
constexpr std::string_view to_string(Orientation o) { return o == Orientation::Left ? "left" : "right"; }

struct TriangleCoord {
  int x = 0;
  int y = 0;
  Orientation orient = Orientation::Left;

  friend constexpr auto operator<=>(const TriangleCoord&, const TriangleCoord&) = default;
};

struct VertexCoord {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const VertexCoord&, const VertexCoord&) = default;
  friend constexpr VertexCoord operator+(VertexCoord a, VertexCoord b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr VertexCoord operator-(VertexCoord a, VertexCoord b) { return {a.x - b.x, a.y - b.y}; }
};

/// Offsets between vertices are plain coordinate differences.
using VertexOffset = VertexCoord;

namespace detail {
constexpr int floor_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
constexpr int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }
}  // namespace detail

constexpr VertexClass vertex_class(VertexCoord v) {
  return detail::floor_mod(v.x + v.y, 2) == 0 ? VertexClass::Down : VertexClass::Up;
}

/// West, East, then South (Down) or North (Up).
constexpr std::array<VertexCoord, 3> neighbors(VertexCoord v) {
  const int vertical = vertex_class(v) == VertexClass::Down ? -1 : 1;
  return {VertexCoord{v.x - 1, v.y}, VertexCoord{v.x + 1, v.y}, VertexCoord{v.x, v.y + vertical}};
}

constexpr std::array<TriangleCoord, 3> neighbors(TriangleCoord t) {
  if (t.orient == Orientation::Left) {
    return {TriangleCoord{t.x, t.y, Orientation::Right}, TriangleCoord{t.x - 1, t.y, Orientation::Right},
            TriangleCoord{t.x, t.y - 1, Orientation::Right}};
  }
  return {TriangleCoord{t.x, t.y, Orientation::Left}, TriangleCoord{t.x + 1, t.y, Orientation::Left},
          TriangleCoord{t.x, t.y + 1, Orientation::Left}};
}

constexpr bool adjacent(VertexCoord a, VertexCoord b) {
  for (const auto& n : neighbors(a))
    if (n == b) return true;
  return false;
}

constexpr bool adjacent(TriangleCoord a, TriangleCoord b) {
  for (const auto& n : neighbors(a))
    if (n == b) return true;
  return false;
}

/// Left triangles land on Down vertices, Right triangles on Up vertices.
constexpr VertexCoord triangle_to_vertex(TriangleCoord t) {
  const int x = t.x - t.y;
  const int y = -(t.x + t.y);
  return t.orient == Orientation::Left ? VertexCoord{x, y} : VertexCoord{x, y - 1};
}

constexpr TriangleCoord vertex_to_triangle(VertexCoord v) {
  if (vertex_class(v) == VertexClass::Down) return {(v.x - v.y) / 2, (-v.x - v.y) / 2, Orientation::Left};
  return {(v.x - v.y - 1) / 2, (-v.x - v.y - 1) / 2, Orientation::Right};
}

/// Translations by (dx, dy) with dx + dy even are lattice automorphisms.
constexpr bool preserves_class(VertexOffset d) { return detail::floor_mod(d.x + d.y, 2) == 0; }

/// Position used to pin a marked vertex (or a canonical anchor) of the given class.
constexpr VertexCoord class_anchor(VertexClass c) {
  return c == VertexClass::Down ? VertexCoord{0, 0} : VertexCoord{1, 0};
}

/// Anchor order shared by both representations: bottom-most row first, then
/// right-most column, then Left before Right. The anchor of an animal is its
/// minimum under this order.
constexpr auto anchor_key(VertexCoord v) { return std::tuple{v.y, -v.x, 0}; }
constexpr auto anchor_key(TriangleCoord t) { return std::tuple{t.y, -t.x, static_cast<int>(t.orient)}; }

/// An element of the dihedral group of order 12 that fixes a hexagon centre of
/// the honeycomb (equivalently a lattice point of the triangular lattice):
/// `reflect` is applied first, then `rotation` steps of 60 degrees.
struct LatticeSymmetry {
  int rotation = 0;
  bool reflect = false;

  friend constexpr bool operator==(const LatticeSymmetry&, const LatticeSymmetry&) = default;

  static constexpr LatticeSymmetry identity() { return {}; }

  constexpr LatticeSymmetry inverse() const {
    if (reflect) return *this;
    return {detail::floor_mod(-rotation, 6), false};
  }

  /// (*this) after `inner`.
  constexpr LatticeSymmetry compose(LatticeSymmetry inner) const {
    const int r = reflect ? rotation - inner.rotation : rotation + inner.rotation;
    return {detail::floor_mod(r, 6), reflect != inner.reflect};
  }
};

constexpr std::array<LatticeSymmetry, 12> all_symmetries() {
  std::array<LatticeSymmetry, 12> out{};
  for (int i = 0; i < 12; ++i) out[i] = {i % 6, i >= 6};
  return out;
}

namespace detail {
// Triangle centroids scaled by 3 in the (a, b) basis of the triangular lattice,
// where rotation by 60 degrees is (p, q) -> (-q, p + q).
struct Centroid {
  int p;
  int q;
};

constexpr Centroid centroid(TriangleCoord t) {
  const int shift = t.orient == Orientation::Left ? 1 : 2;
  return {3 * t.x + shift, 3 * t.y + shift};
}

constexpr TriangleCoord from_centroid(Centroid c) {
  const int shift = floor_mod(c.p, 3);
  return {floor_div(c.p - shift, 3), floor_div(c.q - shift, 3),
          shift == 1 ? Orientation::Left : Orientation::Right};
}
}  // namespace detail

constexpr TriangleCoord apply_symmetry(LatticeSymmetry s, TriangleCoord t) {
  auto c = detail::centroid(t);
  if (s.reflect) c = {c.q, c.p};
  for (int i = 0; i < detail::floor_mod(s.rotation, 6); ++i) c = {-c.q, c.p + c.q};
  return detail::from_centroid(c);
}

constexpr VertexCoord apply_symmetry(LatticeSymmetry s, VertexCoord v) {
  return triangle_to_vertex(apply_symmetry(s, vertex_to_triangle(v)));
}

}  // namespace polyiamond

template <>
struct std::hash<polyiamond::VertexCoord> {
  std::size_t operator()(const polyiamond::VertexCoord& v) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(v.x) << 32) ^ static_cast<unsigned>(v.y));
  }
};

template <>
struct std::hash<polyiamond::TriangleCoord> {
  std::size_t operator()(const polyiamond::TriangleCoord& t) const noexcept {
    const long long key = (static_cast<long long>(t.x) << 33) ^ (static_cast<long long>(t.y) << 1) ^
                          static_cast<long long>(t.orient);
    return std::hash<long long>{}(key);
  }
};
