#include "recross/kites.hpp"

#include <algorithm>

namespace recross {

const char* to_string(ConfigClass c) {
  switch (c) {
    case ConfigClass::CCC: return "CCC";
    case ConfigClass::UnaryCCV: return "unary CCV";
    case ConfigClass::BinaryCCV: return "binary CCV";
    case ConfigClass::CVV: return "CVV";
    case ConfigClass::VVV: return "VVV";
  }
  return "?";
}

namespace {

void require_nested_k6(const ColoredDrawing& cd, const char* who) {
  if (cd.hulls.profile() != std::vector<int>{3, 3})
    throw UnsupportedShape(std::string(who) + ": expected nested K6 (peel [3,3])");
}

}  // namespace

Kite extract_kite(const ColoredDrawing& cd, int origin) {
  require_nested_k6(cd, "extract_kite");
  const std::vector<int>& outer = cd.hulls.layers[0];
  const std::vector<int>& inner = cd.hulls.layers[1];
  if (std::find(outer.begin(), outer.end(), origin) == outer.end())
    throw UnsupportedShape("extract_kite: origin is not an outer-triangle vertex");

  const Point o = cd.drawing[origin];
  // The inner triangle sits inside the wedge of the outer triangle at the
  // origin, so the angular span seen from o is below pi and orientation
  // gives a total order.  Sort counter-clockwise; clockwise reading is then
  // l = last, m = middle, r = first.
  std::array<int, 3> byangle = {inner[0], inner[1], inner[2]};
  std::sort(byangle.begin(), byangle.end(), [&](int a, int b) {
    return orientation(o, cd.drawing[a], cd.drawing[b]) ==
           Orientation::CounterClockwise;
  });
  const int r = byangle[0], m = byangle[1], l = byangle[2];
  const bool concave =
      point_in_triangle(cd.drawing[m], cd.drawing[l], o, cd.drawing[r]);
  const Point lv = cd.drawing[l], rv = cd.drawing[r];
  const std::int64_t dot =
      (lv.x - o.x) * (rv.x - o.x) + (lv.y - o.y) * (rv.y - o.y);
  return Kite{origin, l, m, r,
              concave ? KiteShape::Concave : KiteShape::Convex, dot > 0};
}

KiteConfiguration classify_configuration(const ColoredDrawing& cd) {
  require_nested_k6(cd, "classify_configuration");
  const std::vector<int>& outer = cd.hulls.layers[0];
  KiteConfiguration out{};
  int concave = 0;
  std::vector<int> concave_middles;
  for (size_t i = 0; i < 3; ++i) {
    out.kites[i] = extract_kite(cd, outer[i]);
    if (out.kites[i].shape == KiteShape::Concave) {
      ++concave;
      concave_middles.push_back(out.kites[i].middle);
    }
  }
  std::sort(concave_middles.begin(), concave_middles.end());
  concave_middles.erase(
      std::unique(concave_middles.begin(), concave_middles.end()),
      concave_middles.end());
  out.distinct_concave_middles = static_cast<int>(concave_middles.size());
  switch (concave) {
    case 3: out.cls = ConfigClass::CCC; break;
    case 2:
      out.cls = out.distinct_concave_middles == 1 ? ConfigClass::UnaryCCV
                                                  : ConfigClass::BinaryCCV;
      break;
    case 1: out.cls = ConfigClass::CVV; break;
    default: out.cls = ConfigClass::VVV; break;
  }
  return out;
}

std::array<int, 4> containment_quadrilateral(const ColoredDrawing& cd,
                                             const Kite& kite) {
  require_nested_k6(cd, "containment_quadrilateral");
  if (kite.shape == KiteShape::Convex)
    throw NotConcave("containment_quadrilateral: kite is convex");
  const Point l = cd.drawing[kite.left];
  const Point r = cd.drawing[kite.right];
  const Point o = cd.drawing[kite.origin];
  // Pick the outer vertex across line(l,r) from the kite; lowest index on a
  // tie (both other outer vertices may qualify).
  const std::int64_t side_o = cross_z(l, r, o);
  int opposite = -1;
  for (int v : cd.hulls.layers[0]) {
    if (v == kite.origin) continue;
    const std::int64_t s = cross_z(l, r, cd.drawing[v]);
    if ((s > 0) != (side_o > 0)) {
      if (opposite < 0 || v < opposite) opposite = v;
    }
  }
  if (opposite < 0)
    throw UnsupportedShape("containment_quadrilateral: no opposite outer vertex");
  return {kite.origin, kite.left, opposite, kite.right};
}

bool in_sector(Point apex, Point a, Point b, Point q) {
  const std::int64_t sab = cross_z(apex, a, b);
  const std::int64_t saq = cross_z(apex, a, q);
  const std::int64_t sbq = cross_z(apex, b, q);
  const std::int64_t sba = -sab;
  return saq != 0 && sbq != 0 && ((saq > 0) == (sab > 0)) &&
         ((sbq > 0) == (sba > 0));
}

std::vector<VertexPair> kite_edges(const ColoredDrawing& cd) {
  require_nested_k6(cd, "kite_edges");
  std::vector<VertexPair> out;
  out.reserve(9);
  for (int o : cd.hulls.layers[0])
    for (int i : cd.hulls.layers[1]) out.push_back(make_edge(o, i));
  return out;
}

bool free_zone_contains(const ColoredDrawing& cd, Point p) {
  require_nested_k6(cd, "free_zone_contains");
  {
    std::vector<Point> all = cd.drawing.points();
    all.push_back(p);
    if (auto bad = find_degenerate_triple(all))
      throw GeneralPositionViolation(
          "free_zone_contains: probe point breaks general position", (*bad)[0],
          (*bad)[1], (*bad)[2]);
  }
  // Barrier set: all kite edges minus the inner edges of convex kites.
  std::vector<VertexPair> barriers;
  for (int o : cd.hulls.layers[0]) {
    const Kite k = extract_kite(cd, o);
    barriers.push_back(make_edge(k.origin, k.left));
    barriers.push_back(make_edge(k.origin, k.right));
    if (k.shape == KiteShape::Concave)
      barriers.push_back(make_edge(k.origin, k.middle));
  }
  for (int w : cd.hulls.layers[1]) {
    for (VertexPair e : barriers) {
      if (e.first == w || e.second == w) continue;
      if (segments_cross(p, cd.drawing[w], cd.drawing[e.first],
                         cd.drawing[e.second]))
        return false;
    }
  }
  return true;
}

}  // namespace recross
