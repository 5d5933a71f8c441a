#pragma once

#include <array>

#include "recross/hulls.hpp"

namespace recross {

struct NotConcave : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class KiteShape { Concave, Convex };

// The three edges from one outer-triangle vertex (the origin) to the inner
// triangle of a nested K6.  The inner vertices read left, middle, right in
// clockwise order around the origin; the middle vertex sits inside the
// sector spanned by the other two.  Concave means the middle vertex lies
// inside triangle (left, origin, right).
//
// The middle vertex is defined purely by the angular order; a non-acute
// angle at the origin is recorded in lor_acute but never rejected.
struct Kite {
  int origin;
  int left;
  int middle;
  int right;
  KiteShape shape;
  bool lor_acute;
};

enum class ConfigClass { CCC, UnaryCCV, BinaryCCV, CVV, VVV };

const char* to_string(ConfigClass c);

// Non-concentric crossings forced by each configuration class.
constexpr int non_concentric_count(ConfigClass c) {
  switch (c) {
    case ConfigClass::CCC: return 0;
    case ConfigClass::UnaryCCV: return 1;
    case ConfigClass::BinaryCCV: return 1;
    case ConfigClass::CVV: return 2;
    case ConfigClass::VVV: return 3;
  }
  return -1;
}

struct KiteConfiguration {
  std::array<Kite, 3> kites;  // one per outer vertex, in outer-layer order
  ConfigClass cls;
  int distinct_concave_middles;
};

// Requires a nested K6 colouring (peel [3,3]) and an origin on the outer
// triangle.
Kite extract_kite(const ColoredDrawing& cd, int origin);

KiteConfiguration classify_configuration(const ColoredDrawing& cd);

// For a concave kite, the quadrilateral (origin, left, opposite-origin,
// right) of kite edges that encloses the kite's middle vertex.
std::array<int, 4> containment_quadrilateral(const ColoredDrawing& cd,
                                             const Kite& kite);

// True iff p sees every inner vertex with no blocking kite edge, where the
// inner edges of convex kites are removed from the barrier set.
bool free_zone_contains(const ColoredDrawing& cd, Point p);

// Strict membership in the open sector at apex spanned by rays to a and b
// (angle < pi).
bool in_sector(Point apex, Point a, Point b, Point q);

// All nine kite edges of a nested K6, as vertex pairs.
std::vector<VertexPair> kite_edges(const ColoredDrawing& cd);

}  // namespace recross
