#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "polyiamond/geometry.hpp"

namespace polyiamond {
namespace {

const char* kDefaultJson = R"([
  {"id": "g", "marked_class": "down", "white_bullets": [[-1, 0], [1, 0]], "forbidden": [[0, -1], [-1, -1], [2, -1]]},
  {"id": "h", "marked_class": "up", "white_bullets": [[0, 1], [1, 0]], "forbidden": [[-1, 0], [-2, 0], [1, -1]]},
  {"id": "k", "marked_class": "down", "white_bullets": [[1, 0]], "forbidden": [[-1, 0], [0, -1], [-1, 1]]},
  {"id": "g'", "marked_class": "up", "white_bullets": [[-1, 0], [0, 1]], "forbidden": [[1, 0], [0, -1], [2, 0]]}
])";

TEST(Geometry, DefaultIsValid) { EXPECT_NO_THROW(validate(default_geometry())); }

TEST(Geometry, ParsesJson) {
  const Geometry geo = parse_geometry(kDefaultJson);
  EXPECT_EQ(geo.g, default_geometry().g);
  EXPECT_EQ(geo.h, default_geometry().h);
  EXPECT_EQ(geo.k, default_geometry().k);
  EXPECT_EQ(geo.g_prime, default_geometry().g_prime);
}

TEST(Geometry, DumpRoundTrips) {
  const Geometry geo = parse_geometry(dump_geometry(default_geometry()));
  EXPECT_EQ(geo.h, default_geometry().h);
  EXPECT_EQ(geo.g_prime, default_geometry().g_prime);
}

TEST(Geometry, ShippedDataFileMatchesDefault) {
  const Geometry geo = load_geometry(std::string(POLYIAMOND_DATA_DIR) + "/default_geometry.json");
  EXPECT_EQ(dump_geometry(geo), dump_geometry(default_geometry()));
}

TEST(Geometry, RejectsUnknownAndMissingKeys) {
  std::string text = kDefaultJson;
  text.replace(text.find("\"forbidden\""), 11, "\"crosses\"");
  EXPECT_THROW(parse_geometry(text), ValidationError);

  const char* extra = R"([{"id": "g", "marked_class": "down", "white_bullets": [[-1, 0], [1, 0]],
      "forbidden": [[0, -1]], "note": "x"}])";
  EXPECT_THROW(parse_geometry(extra), ValidationError);
  EXPECT_THROW(parse_geometry("{"), ValidationError);
  EXPECT_THROW(parse_geometry("[]"), ValidationError);
  EXPECT_THROW(load_geometry("/nonexistent/geometry.json"), InputError);
}

TEST(Geometry, RejectsDuplicateType) {
  std::string text = kDefaultJson;
  text.replace(text.find("\"id\": \"h\""), 9, "\"id\": \"g\"");
  EXPECT_THROW(parse_geometry(text), ValidationError);
}

TEST(Geometry, ValidationCatchesBrokenTypes) {
  MarkedClassSpec s = default_geometry().g;
  s.forbidden.push_back({1, 0});  // white bullet also forbidden
  EXPECT_THROW(validate(s), ValidationError);

  s = default_geometry().g;
  s.forbidden.erase(s.forbidden.begin());  // South neither white nor forbidden
  EXPECT_THROW(validate(s), ValidationError);

  s = default_geometry().g;
  s.white_bullets = {{-1, 0}, {0, 1}};  // (0,1) is not adjacent to a Down vertex
  EXPECT_THROW(validate(s), ValidationError);

  s = default_geometry().k;
  s.white_bullets.push_back({0, -1});
  EXPECT_THROW(validate(s), ValidationError);

  s = default_geometry().g;
  s.forbidden.push_back({0, 0});
  EXPECT_THROW(validate(s), ValidationError);

  Geometry geo = default_geometry();
  geo.h.id = MarkedType::K;
  EXPECT_THROW(validate(geo), ValidationError);
}

TEST(Geometry, KHasExactlyOneFreeNeighbor) {
  const MarkedClassSpec k = default_geometry().k;
  int free = 0;
  for (const auto& n : neighbors(k.anchor())) {
    const VertexOffset off = n - k.anchor();
    if (std::find(k.forbidden.begin(), k.forbidden.end(), off) == k.forbidden.end()) ++free;
  }
  EXPECT_EQ(free, 1);
}

TEST(Geometry, TransformPreservesValidity) {
  for (const auto& s : all_symmetries()) {
    const MarkedClassSpec img = transform(default_geometry().h, s);
    EXPECT_NO_THROW(validate(img));
    EXPECT_EQ(img.forbidden.size(), default_geometry().h.forbidden.size());
  }
}

TEST(Geometry, GPrimeIsTheImageOfG) {
  const Geometry geo = default_geometry();
  const auto s = find_symmetry(geo.g, geo.g_prime);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(same_constraints(transform(geo.g, *s), geo.g_prime));
  EXPECT_FALSE(find_symmetry(geo.g, geo.k).has_value());
}

TEST(Closure, DefaultGeometryIsClosed) {
  const ClosureReport r = check_closure(default_geometry());
  EXPECT_EQ(r.steps.size(), 5u);
  for (const auto& step : r.steps)
    EXPECT_TRUE(step.holds()) << to_string(step.parent) << " -> " << to_string(step.child);
  EXPECT_TRUE(r.observation_down);
  EXPECT_TRUE(r.observation_up);
  EXPECT_TRUE(r.holds());
}

// The "South, South-West, South-East, East-East" variant of g cannot be closed:
// the East-East cross is not implied by anything the parent knows.
TEST(Closure, FourCrossVariantOfGIsNotClosed) {
  Geometry geo = default_geometry();
  geo.g.forbidden = {{0, -1}, {-1, -1}, {1, -1}, {2, 0}};
  ASSERT_NO_THROW(validate(geo.g));
  const LatticeSymmetry s = *find_symmetry(default_geometry().g, default_geometry().g_prime);
  MarkedClassSpec gp = transform(geo.g, s);
  gp.id = MarkedType::GPrime;
  geo.g_prime = gp;
  EXPECT_FALSE(check_closure(geo).holds());
}

TEST(Closure, CrossAboveMarkedVertexBreaksObservation) {
  Geometry geo = default_geometry();
  geo.g.forbidden = {{0, -1}, {-1, -1}, {2, -1}, {1, 1}};  // a cross above the marked vertex
  EXPECT_FALSE(check_closure(geo).observation_down);
}

}  // namespace
}  // namespace polyiamond
