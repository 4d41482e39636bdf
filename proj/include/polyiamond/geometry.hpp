#pragma once

// Marked-vertex types g, h, k and g'. A type pins a marked vertex of a given
// class and lists the positions (relative to it) that must stay empty, plus
// the expansion neighbours ("white bullets") through which the rest of the
// polyiamond attaches.
//
// Removing the marked vertex of a type-g configuration splits the remainder
// into a piece at the first white bullet (type g, in the g' orientation) and a
// piece at the second (type h). Type h splits into g and k; type k has a single
// white bullet whose piece is of type g.

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "polyiamond/errors.hpp"
#include "polyiamond/lattice.hpp"

namespace polyiamond {

enum class MarkedType { G, H, K, GPrime };

constexpr std::string_view to_string(MarkedType t) {
  switch (t) {
    case MarkedType::G: return "g";
    case MarkedType::H: return "h";
    case MarkedType::K: return "k";
    case MarkedType::GPrime: return "g'";
  }
  return "?";
}

struct MarkedClassSpec {
  MarkedType id = MarkedType::G;
  VertexClass marked_class = VertexClass::Down;
  std::vector<VertexOffset> white_bullets;
  std::vector<VertexOffset> forbidden;

  VertexCoord anchor() const { return class_anchor(marked_class); }

  /// Absolute forbidden positions with the marked vertex at its class anchor.
  std::vector<VertexCoord> forbidden_positions() const {
    std::vector<VertexCoord> out;
    out.reserve(forbidden.size());
    for (const auto& off : forbidden) out.push_back(anchor() + off);
    return out;
  }

  friend bool operator==(const MarkedClassSpec&, const MarkedClassSpec&) = default;
};

/// Number of white bullets each type expands through.
constexpr std::size_t expected_white_bullets(MarkedType t) { return t == MarkedType::K ? 1 : 2; }

/// Throws ValidationError naming the first violated invariant.
inline void validate(const MarkedClassSpec& spec) {
  const std::string name(to_string(spec.id));
  if (spec.white_bullets.size() != expected_white_bullets(spec.id))
    throw ValidationError("type " + name + ": expected " + std::to_string(expected_white_bullets(spec.id)) +
                          " white bullets, got " + std::to_string(spec.white_bullets.size()));
  const std::set<VertexOffset> forbidden(spec.forbidden.begin(), spec.forbidden.end());
  if (forbidden.size() != spec.forbidden.size()) throw ValidationError("type " + name + ": duplicate forbidden offset");
  if (forbidden.contains(VertexOffset{0, 0}))
    throw ValidationError("type " + name + ": the marked vertex itself is forbidden");
  const VertexCoord c = spec.anchor();
  std::set<VertexOffset> whites;
  for (const auto& w : spec.white_bullets) {
    if (forbidden.contains(w)) throw ValidationError("type " + name + ": white bullet listed as forbidden");
    if (!adjacent(c, c + w)) throw ValidationError("type " + name + ": white bullet is not a neighbor of the marked vertex");
    if (!whites.insert(w).second) throw ValidationError("type " + name + ": duplicate white bullet");
  }
  for (const auto& n : neighbors(c)) {
    const VertexOffset off = n - c;
    if (!whites.contains(off) && !forbidden.contains(off))
      throw ValidationError("type " + name + ": neighbor (" + std::to_string(off.x) + "," + std::to_string(off.y) +
                            ") is neither a white bullet nor forbidden");
  }
}

/// Image of a type under a lattice symmetry, re-pinned at the anchor of its new class.
inline MarkedClassSpec transform(const MarkedClassSpec& spec, LatticeSymmetry s) {
  const VertexCoord c = spec.anchor();
  const VertexCoord image = apply_symmetry(s, c);
  MarkedClassSpec out;
  out.id = spec.id;
  out.marked_class = vertex_class(image);
  for (const auto& w : spec.white_bullets) out.white_bullets.push_back(apply_symmetry(s, c + w) - image);
  for (const auto& f : spec.forbidden) out.forbidden.push_back(apply_symmetry(s, c + f) - image);
  return out;
}

inline bool same_constraints(const MarkedClassSpec& a, const MarkedClassSpec& b) {
  return a.marked_class == b.marked_class &&
         std::set<VertexOffset>(a.forbidden.begin(), a.forbidden.end()) ==
             std::set<VertexOffset>(b.forbidden.begin(), b.forbidden.end());
}

/// A symmetry carrying `from` onto `to` (same class, same forbidden set), if any.
inline std::optional<LatticeSymmetry> find_symmetry(const MarkedClassSpec& from, const MarkedClassSpec& to) {
  for (const auto& s : all_symmetries())
    if (same_constraints(transform(from, s), to)) return s;
  return std::nullopt;
}

struct Geometry {
  MarkedClassSpec g;
  MarkedClassSpec h;
  MarkedClassSpec k;
  MarkedClassSpec g_prime;

  const MarkedClassSpec& get(MarkedType t) const {
    switch (t) {
      case MarkedType::G: return g;
      case MarkedType::H: return h;
      case MarkedType::K: return k;
      case MarkedType::GPrime: return g_prime;
    }
    return g;
  }
};

inline void validate(const Geometry& geo) {
  const std::array<std::pair<const MarkedClassSpec*, MarkedType>, 4> slots{
      {{&geo.g, MarkedType::G}, {&geo.h, MarkedType::H}, {&geo.k, MarkedType::K}, {&geo.g_prime, MarkedType::GPrime}}};
  for (const auto& [spec, id] : slots) {
    if (spec->id != id) throw ValidationError("geometry slot for type " + std::string(to_string(id)) + " holds another type");
    validate(*spec);
  }
}

/// Shipped reconstruction. Each child's constraints are implied by the parent's
/// (see check_closure), and g, g' cover the bottom-most-then-right-most vertex
/// of every polyiamond.
inline Geometry default_geometry() {
  Geometry geo;
  geo.g = {MarkedType::G, VertexClass::Down, {{-1, 0}, {1, 0}}, {{0, -1}, {-1, -1}, {2, -1}}};
  geo.h = {MarkedType::H, VertexClass::Up, {{0, 1}, {1, 0}}, {{-1, 0}, {-2, 0}, {1, -1}}};
  geo.k = {MarkedType::K, VertexClass::Down, {{1, 0}}, {{-1, 0}, {0, -1}, {-1, 1}}};
  geo.g_prime = {MarkedType::GPrime, VertexClass::Up, {{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}, {2, 0}}};
  return geo;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {
inline MarkedType parse_type(const std::string& s) {
  if (s == "g") return MarkedType::G;
  if (s == "h") return MarkedType::H;
  if (s == "k") return MarkedType::K;
  if (s == "g'") return MarkedType::GPrime;
  throw ValidationError("unknown marked type id '" + s + "'");
}

inline VertexClass parse_class(const std::string& s) {
  if (s == "down") return VertexClass::Down;
  if (s == "up") return VertexClass::Up;
  throw ValidationError("marked_class must be \"down\" or \"up\", got '" + s + "'");
}

inline std::vector<VertexOffset> parse_offsets(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw ValidationError(std::string(key) + " must be an array of [dx, dy] pairs");
  std::vector<VertexOffset> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      throw ValidationError(std::string(key) + " entries must be integer pairs");
    out.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return out;
}

inline nlohmann::ordered_json offsets_json(const std::vector<VertexOffset>& offs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& o : offs) out.push_back({o.x, o.y});
  return out;
}
}  // namespace detail

inline MarkedClassSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("marked type entry must be an object");
  static const std::set<std::string> known{"id", "marked_class", "white_bullets", "forbidden"};
  for (const auto& [key, _] : j.items())
    if (!known.contains(key)) throw ValidationError("unknown key '" + key + "' in geometry entry");
  for (const auto& key : known)
    if (!j.contains(key)) throw ValidationError("missing key '" + key + "' in geometry entry");
  if (!j["id"].is_string() || !j["marked_class"].is_string())
    throw ValidationError("id and marked_class must be strings");
  MarkedClassSpec spec;
  spec.id = detail::parse_type(j["id"].get<std::string>());
  spec.marked_class = detail::parse_class(j["marked_class"].get<std::string>());
  spec.white_bullets = detail::parse_offsets(j["white_bullets"], "white_bullets");
  spec.forbidden = detail::parse_offsets(j["forbidden"], "forbidden");
  return spec;
}

inline nlohmann::ordered_json to_json(const MarkedClassSpec& spec) {
  nlohmann::ordered_json j;
  j["id"] = std::string(to_string(spec.id));
  j["marked_class"] = std::string(to_string(spec.marked_class));
  j["white_bullets"] = detail::offsets_json(spec.white_bullets);
  j["forbidden"] = detail::offsets_json(spec.forbidden);
  return j;
}

/// Parses the four-entry geometry array and validates it.
inline Geometry geometry_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw ValidationError("geometry must be an array of four type objects");
  Geometry geo;
  std::set<MarkedType> seen;
  for (const auto& item : j) {
    MarkedClassSpec spec = spec_from_json(item);
    if (!seen.insert(spec.id).second)
      throw ValidationError("type " + std::string(to_string(spec.id)) + " appears twice");
    switch (spec.id) {
      case MarkedType::G: geo.g = std::move(spec); break;
      case MarkedType::H: geo.h = std::move(spec); break;
      case MarkedType::K: geo.k = std::move(spec); break;
      case MarkedType::GPrime: geo.g_prime = std::move(spec); break;
    }
  }
  validate(geo);
  return geo;
}

inline Geometry parse_geometry(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("geometry is not valid JSON: ") + e.what());
  }
  return geometry_from_json(j);
}

inline Geometry load_geometry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open geometry file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_geometry(buf.str());
}

inline std::string dump_geometry(const Geometry& geo) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (auto t : {MarkedType::G, MarkedType::H, MarkedType::K, MarkedType::GPrime}) j.push_back(to_json(geo.get(t)));
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Closure: every decomposition step lands in a configuration whose forbidden
// positions are already known to be empty.

struct ClosureStep {
  MarkedType parent;
  VertexOffset white_bullet;
  MarkedType child;
  std::optional<LatticeSymmetry> placement;  // empty when no symmetry fits

  bool holds() const { return placement.has_value(); }
};

struct ClosureReport {
  std::vector<ClosureStep> steps;
  bool observation_down = false;  // g's forbidden set lies below or right of the marked vertex
  bool observation_up = false;    // same for g'
  std::optional<LatticeSymmetry> g_to_g_prime;

  bool holds() const {
    return observation_down && observation_up && g_to_g_prime &&
           std::all_of(steps.begin(), steps.end(), [](const ClosureStep& s) { return s.holds(); });
  }
};

namespace detail {
// Known-empty positions when the piece at white bullet `w` is cut out of a
// `parent` configuration: the parent's forbidden cells, the parent's marked
// vertex, and the other white bullets (they belong to other pieces or are empty).
inline std::set<VertexCoord> known_empty(const MarkedClassSpec& parent, VertexOffset w) {
  const VertexCoord c = parent.anchor();
  std::set<VertexCoord> out{c};
  for (const auto& f : parent.forbidden) out.insert(c + f);
  for (const auto& other : parent.white_bullets)
    if (other != w) out.insert(c + other);
  return out;
}

inline std::optional<LatticeSymmetry> place_child(const MarkedClassSpec& child, VertexCoord at,
                                                  const std::set<VertexCoord>& empty) {
  for (const auto& s : all_symmetries()) {
    const MarkedClassSpec image = transform(child, s);
    if (image.marked_class != vertex_class(at)) continue;
    const bool fits = std::all_of(image.forbidden.begin(), image.forbidden.end(),
                                  [&](VertexOffset f) { return empty.contains(at + f); });
    if (fits) return s;
  }
  return std::nullopt;
}

inline bool below_or_right(const MarkedClassSpec& spec) {
  return std::all_of(spec.forbidden.begin(), spec.forbidden.end(),
                     [](VertexOffset f) { return f.y < 0 || (f.y == 0 && f.x > 0); });
}
}  // namespace detail

/// Children per type, in white-bullet order.
inline std::vector<MarkedType> child_types(MarkedType t) {
  switch (t) {
    case MarkedType::G: return {MarkedType::GPrime, MarkedType::H};
    case MarkedType::GPrime: return {MarkedType::G, MarkedType::H};
    case MarkedType::H: return {MarkedType::G, MarkedType::K};
    case MarkedType::K: return {MarkedType::G};
  }
  return {};
}

inline ClosureReport check_closure(const Geometry& geo) {
  ClosureReport report;
  for (auto parent_type : {MarkedType::G, MarkedType::H, MarkedType::K}) {
    const MarkedClassSpec& parent = geo.get(parent_type);
    const auto children = child_types(parent_type);
    for (std::size_t i = 0; i < parent.white_bullets.size() && i < children.size(); ++i) {
      const VertexOffset w = parent.white_bullets[i];
      const auto empty = detail::known_empty(parent, w);
      report.steps.push_back(
          {parent_type, w, children[i], detail::place_child(geo.get(children[i]), parent.anchor() + w, empty)});
    }
  }
  report.observation_down = geo.g.marked_class == VertexClass::Down && detail::below_or_right(geo.g);
  report.observation_up = geo.g_prime.marked_class == VertexClass::Up && detail::below_or_right(geo.g_prime);
  report.g_to_g_prime = find_symmetry(geo.g, geo.g_prime);
  return report;
}

}  // namespace polyiamond
