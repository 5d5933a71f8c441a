#include <doctest.h>

#include "recross/generate.hpp"
#include "recross/kites.hpp"

using namespace recross;

namespace {

const std::vector<Point> kK6Ccc = {{0, 100}, {-87, -50}, {87, -50},
                                   {0, 10},  {-9, -5},   {9, -5}};
const std::vector<Point> kK6Vvv = {{0, 100}, {-87, -50}, {87, -50},
                                   {0, -10}, {9, 5},     {-9, 5}};

int vertex_at(const Drawing& d, Point p) {
  for (int v = 0; v < d.size(); ++v)
    if (d[v] == p) return v;
  return -1;
}

}  // namespace

TEST_SUITE_BEGIN("kites");

TEST_CASE("kite extraction, concave case") {
  const Drawing d(kK6Ccc);
  const ColoredDrawing cd = color_by_hulls(d);
  const Kite k = extract_kite(cd, vertex_at(d, {0, 100}));
  CHECK(d[k.middle] == Point{0, 10});
  CHECK(d[k.left] == Point{9, -5});
  CHECK(d[k.right] == Point{-9, -5});
  CHECK(k.shape == KiteShape::Concave);
}

TEST_CASE("kite extraction, convex case") {
  const Drawing d(kK6Vvv);
  const ColoredDrawing cd = color_by_hulls(d);
  const Kite k = extract_kite(cd, vertex_at(d, {0, 100}));
  CHECK(d[k.middle] == Point{0, -10});
  CHECK(k.shape == KiteShape::Convex);
}

TEST_CASE("kite extraction rejects inner origins") {
  const Drawing d(kK6Ccc);
  const ColoredDrawing cd = color_by_hulls(d);
  CHECK_THROWS_AS(extract_kite(cd, vertex_at(d, {0, 10})), UnsupportedShape);
}

TEST_CASE("symmetric drawings classify as CCC and VVV") {
  CHECK(classify_configuration(color_by_hulls(Drawing(kK6Ccc))).cls ==
        ConfigClass::CCC);
  CHECK(classify_configuration(color_by_hulls(Drawing(kK6Vvv))).cls ==
        ConfigClass::VVV);
}

TEST_CASE("generated instances hit every class") {
  for (ConfigClass cls : {ConfigClass::CCC, ConfigClass::UnaryCCV,
                          ConfigClass::BinaryCCV, ConfigClass::CVV,
                          ConfigClass::VVV}) {
    const Drawing d = generate_nested_k6(11, cls);
    const KiteConfiguration cfg = classify_configuration(color_by_hulls(d));
    CHECK(cfg.cls == cls);
    if (cls == ConfigClass::UnaryCCV) CHECK(cfg.distinct_concave_middles == 1);
    if (cls == ConfigClass::BinaryCCV) CHECK(cfg.distinct_concave_middles == 2);
    if (cls == ConfigClass::CCC) CHECK(cfg.distinct_concave_middles == 3);
  }
}

TEST_CASE("class determines the non-concentric crossing count") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Drawing d = generate_nested_k6_any(seed);
    const ColoredDrawing cd = color_by_hulls(d);
    const KiteConfiguration cfg = classify_configuration(cd);
    CHECK(count_non_concentric_crossings(cd) == non_concentric_count(cfg.cls));
  }
  // per-class spot checks
  const ColoredDrawing cvv =
      color_by_hulls(generate_nested_k6(5, ConfigClass::CVV));
  CHECK(count_non_concentric_crossings(cvv) == 2);
  const ColoredDrawing unary =
      color_by_hulls(generate_nested_k6(5, ConfigClass::UnaryCCV));
  CHECK(count_non_concentric_crossings(unary) == 1);
  CHECK_FALSE(are_concentric(unary, Color::Red, Color::Green));
}

TEST_CASE("near-equilateral kites have acute origin angles") {
  const ColoredDrawing cd = color_by_hulls(Drawing(kK6Ccc));
  for (int o : cd.hulls.layers[0]) CHECK(extract_kite(cd, o).lor_acute);
}

TEST_CASE("containment quadrilateral holds the middle vertex") {
  const Drawing d(kK6Ccc);
  const ColoredDrawing cd = color_by_hulls(d);
  for (int o : cd.hulls.layers[0]) {
    const Kite k = extract_kite(cd, o);
    REQUIRE(k.shape == KiteShape::Concave);
    const std::array<int, 4> quad = containment_quadrilateral(cd, k);
    CHECK(quad[0] == k.origin);
    const Point m = d[k.middle];
    const bool inside =
        point_in_triangle(m, d[quad[0]], d[quad[1]], d[quad[3]]) ||
        point_in_triangle(m, d[quad[2]], d[quad[1]], d[quad[3]]);
    CHECK(inside);
  }
}

TEST_CASE("containment quadrilateral rejects convex kites") {
  const Drawing d(kK6Vvv);
  const ColoredDrawing cd = color_by_hulls(d);
  const Kite k = extract_kite(cd, cd.hulls.layers[0][0]);
  REQUIRE(k.shape == KiteShape::Convex);
  CHECK_THROWS_AS(containment_quadrilateral(cd, k), NotConcave);
}

TEST_CASE("free zone membership") {
  const Drawing ccc(kK6Ccc);
  const ColoredDrawing cd = color_by_hulls(ccc);
  // centroid of the inner triangle sees everything in a CCC drawing
  CHECK(free_zone_contains(cd, Point{1, 1}));
  // far outside, sightlines cross kite outer edges
  const Drawing vvv(kK6Vvv);
  CHECK_FALSE(free_zone_contains(color_by_hulls(vvv), Point{500, 501}));
  // collinear probe is rejected: (0,100),(0,10) and (0,55) line up
  CHECK_THROWS_AS(free_zone_contains(cd, Point{0, 55}),
                  GeneralPositionViolation);
}

TEST_CASE("sector membership") {
  // apex at origin, rays along the axes
  CHECK(in_sector({0, 0}, {10, 0}, {0, 10}, {5, 5}));
  CHECK_FALSE(in_sector({0, 0}, {10, 0}, {0, 10}, {-5, 5}));
  CHECK_FALSE(in_sector({0, 0}, {10, 0}, {0, 10}, {5, -5}));
  CHECK_FALSE(in_sector({0, 0}, {10, 0}, {0, 10}, {-5, -5}));
  // boundary rays are excluded
  CHECK_FALSE(in_sector({0, 0}, {10, 0}, {0, 10}, {7, 0}));
}

TEST_SUITE_END();
