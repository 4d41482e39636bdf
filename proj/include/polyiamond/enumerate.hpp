#pragma once

// Exact counts of fixed polyiamonds T(n) and of marked configurations
// G_n, H_n, K_n.
//
// Fixed counts: each translation class has a unique anchor (bottom-most row,
// then right-most cell). Pinning the anchor at the origin of its class and
// growing only through cells that come after it in anchor order visits every
// class exactly once.
//
// In the hex representation a lone vertex is a single shape, so T(1) = 1 there
// while the triangle representation has T(1) = 2.

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyiamond/animal.hpp"
#include "polyiamond/bigint.hpp"
#include "polyiamond/errors.hpp"
#include "polyiamond/geometry.hpp"
#include "polyiamond/lattice.hpp"
#include "polyiamond/redelmeier.hpp"

namespace polyiamond {

enum class Representation { Triangle, Hex };
enum class Provenance { Redelmeier, NaiveOracle, Recurrence, File };

constexpr std::string_view to_string(Representation r) { return r == Representation::Triangle ? "triangle" : "hex"; }

/// values[n] for n = 0..n_max. Fixed counts store values[0] = 0; marked
/// counts store values[0] = 1.
struct CountTable {
  Representation representation = Representation::Hex;
  std::vector<BigInt> values;
  Provenance provenance = Provenance::Redelmeier;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
  const BigInt& operator[](std::size_t n) const { return values.at(n); }
};

// ---------------------------------------------------------------------------
// Caps

struct Caps {
  int count_fixed = 20;
  int count_marked = 14;
  int oracle = 12;
};

/// Hard caps; POLYIAMOND_MAX_CELLS overrides all of them.
inline Caps current_caps() {
  Caps caps;
  if (const char* env = std::getenv("POLYIAMOND_MAX_CELLS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) {
      caps.count_fixed = caps.count_marked = caps.oracle = static_cast<int>(v);
    }
  }
  return caps;
}

namespace detail {
inline void check_size(int n_max, int cap, const char* what) {
  if (n_max < 1) throw InputError(std::string(what) + ": n_max must be at least 1");
  if (n_max > cap)
    throw SizeLimitError(std::string(what) + ": n_max " + std::to_string(n_max) + " exceeds cap " +
                         std::to_string(cap));
}

template <class Cell>
std::vector<std::uint8_t> before_anchor(const CellPatch<Cell>& patch, const Cell& root) {
  std::vector<std::uint8_t> blocked(patch.size(), 0);
  for (std::size_t i = 0; i < patch.size(); ++i)
    if (anchor_key(patch.cell(static_cast<int>(i))) < anchor_key(root)) blocked[i] = 1;
  return blocked;
}

template <class Cell>
std::vector<Cell> anchor_roots() {
  if constexpr (std::is_same_v<Cell, TriangleCoord>) {
    return {TriangleCoord{0, 0, Orientation::Left}, TriangleCoord{0, 0, Orientation::Right}};
  } else {
    return {class_anchor(VertexClass::Down), class_anchor(VertexClass::Up)};
  }
}

template <class Cell>
std::vector<unsigned long long> fixed_counts(int n_max, unsigned workers) {
  const CellPatch<Cell> patch(n_max + 1);
  std::vector<unsigned long long> total(static_cast<std::size_t>(n_max) + 1, 0);
  for (const Cell& root : anchor_roots<Cell>()) {
    const auto part = count_rooted(patch, patch.index_of(root), before_anchor(patch, root), n_max, workers);
    for (std::size_t n = 0; n < total.size(); ++n) total[n] += part[n];
  }
  return total;
}

inline CountTable to_table(const std::vector<unsigned long long>& raw, Representation rep, Provenance prov) {
  CountTable table{rep, {}, prov};
  table.values.reserve(raw.size());
  for (auto v : raw) table.values.push_back(big_from_u64(v));
  return table;
}
}  // namespace detail

/// T(n) for n <= n_max by rooted expansion.
inline CountTable count_fixed(int n_max, Representation rep, unsigned workers = 1) {
  detail::check_size(n_max, current_caps().count_fixed, "count_fixed");
  std::vector<unsigned long long> raw = rep == Representation::Triangle
                                            ? detail::fixed_counts<TriangleCoord>(n_max, workers)
                                            : detail::fixed_counts<VertexCoord>(n_max, workers);
  if (rep == Representation::Hex) raw[1] = 1;
  return detail::to_table(raw, rep, Provenance::Redelmeier);
}

/// Every fixed polyiamond with `size` cells, canonical, by breadth-first growth
/// and a set of canonical forms. Slow; meant as an independent check.
template <class Cell>
std::set<Polyiamond<Cell>> all_fixed(int size) {
  std::set<Polyiamond<Cell>> level;
  for (const Cell& root : detail::anchor_roots<Cell>()) level.insert(Polyiamond<Cell>::from_cells({root}));
  for (int n = 1; n < size; ++n) {
    std::set<Polyiamond<Cell>> next;
    for (const auto& p : level) {
      for (const Cell& c : p.cells()) {
        for (const Cell& nb : neighbors(c)) {
          if (p.contains(nb)) continue;
          std::vector<Cell> grown(p.cells().begin(), p.cells().end());
          grown.push_back(nb);
          next.insert(Polyiamond<Cell>::from_cells(std::move(grown)));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

inline CountTable count_fixed_oracle(int n_max, Representation rep) {
  detail::check_size(n_max, current_caps().oracle, "count_fixed_oracle");
  std::vector<unsigned long long> raw(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    raw[static_cast<std::size_t>(n)] = rep == Representation::Triangle ? all_fixed<TriangleCoord>(n).size()
                                                                       : all_fixed<VertexCoord>(n).size();
  }
  if (rep == Representation::Hex) raw[1] = 1;
  return detail::to_table(raw, rep, Provenance::NaiveOracle);
}

// ---------------------------------------------------------------------------
// Marked configurations

namespace detail {
inline std::vector<std::uint8_t> forbidden_mask(const CellPatch<VertexCoord>& patch, const MarkedClassSpec& spec) {
  std::vector<std::uint8_t> blocked(patch.size(), 0);
  for (const auto& f : spec.forbidden_positions()) {
    const int idx = patch.index_of(f);
    if (idx >= 0) blocked[static_cast<std::size_t>(idx)] = 1;
  }
  return blocked;
}
}  // namespace detail

/// Pairs (P, c) with |P| = n, c pinned at the class anchor and every forbidden
/// position empty. values[0] = 1.
inline CountTable count_marked(const MarkedClassSpec& spec, int n_max, unsigned workers = 1) {
  validate(spec);
  detail::check_size(n_max, current_caps().count_marked, "count_marked");
  const CellPatch<VertexCoord> patch(n_max + 2);
  auto raw = count_rooted(patch, patch.index_of(spec.anchor()), detail::forbidden_mask(patch, spec), n_max, workers);
  raw[0] = 1;
  return detail::to_table(raw, Representation::Hex, Provenance::Redelmeier);
}

/// Calls `visit(cells)` for every marked configuration of exactly `size`
/// vertices (cells in absolute coordinates, marked vertex first).
template <class Visit>
void for_each_marked(const MarkedClassSpec& spec, int size, Visit&& visit) {
  validate(spec);
  detail::check_size(size, current_caps().count_marked, "for_each_marked");
  const CellPatch<VertexCoord> patch(size + 2);
  std::vector<VertexCoord> cells;
  expand_rooted(patch, patch.index_of(spec.anchor()), detail::forbidden_mask(patch, spec), size, WorkSplit{},
                [&](std::span<const int> indices) {
                  if (static_cast<int>(indices.size()) != size) return;
                  cells.clear();
                  for (int i : indices) cells.push_back(patch.cell(i));
                  visit(std::span<const VertexCoord>(cells));
                });
}

struct MarkedTables {
  CountTable g;
  CountTable h;
  CountTable k;
};

inline MarkedTables count_marked(const Geometry& geo, int n_max, unsigned workers = 1) {
  return {count_marked(geo.g, n_max, workers), count_marked(geo.h, n_max, workers),
          count_marked(geo.k, n_max, workers)};
}

}  // namespace polyiamond
