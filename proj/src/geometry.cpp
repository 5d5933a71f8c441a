#include "recross/geometry.hpp"

#include <algorithm>

namespace recross {

std::optional<std::array<int, 3>> find_degenerate_triple(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) return std::array<int, 3>{i, j, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear)
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

bool is_general_position(std::span<const Point> pts) {
  return !find_degenerate_triple(pts).has_value();
}

bool segments_cross(Point a1, Point a2, Point b1, Point b2) {
  if (a1 == a2 || b1 == b2)
    throw std::invalid_argument("segments_cross: zero-length segment");
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  const std::int64_t oa1 = cross_z(b1, b2, a1);
  const std::int64_t oa2 = cross_z(b1, b2, a2);
  const std::int64_t ob1 = cross_z(a1, a2, b1);
  const std::int64_t ob2 = cross_z(a1, a2, b2);
  // With all four endpoints distinct and no three collinear, a proper
  // interior intersection is exactly a double sign alternation.
  return ((oa1 > 0) != (oa2 > 0)) && ((ob1 > 0) != (ob2 > 0)) && oa1 != 0 &&
         oa2 != 0 && ob1 != 0 && ob2 != 0;
}

Drawing::Drawing(std::vector<Point> pts) : points_(std::move(pts)) {
  if (points_.size() < 3)
    throw std::invalid_argument("Drawing: need at least 3 points");
  for (size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.x < -kCoordBound || p.x > kCoordBound || p.y < -kCoordBound ||
        p.y > kCoordBound)
      throw std::invalid_argument("Drawing: coordinate out of range at vertex " +
                                  std::to_string(i));
  }
  if (auto bad = find_degenerate_triple(points_)) {
    const auto [i, j, k] = *bad;
    if (k < 0)
      throw GeneralPositionViolation(
          "duplicate points: vertices " + std::to_string(i) + " and " +
              std::to_string(j),
          i, j, k);
    throw GeneralPositionViolation("collinear triple: vertices " +
                                       std::to_string(i) + ", " +
                                       std::to_string(j) + ", " +
                                       std::to_string(k),
                                   i, j, k);
  }
}

CrossingSet count_crossings(const Drawing& d) {
  const int n = d.size();
  CrossingSet out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = a; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          // Enumerate edge pairs (a,b) < (c,e) without shared vertices.
          if (std::make_pair(c, e) <= std::make_pair(a, b)) continue;
          if (c == a || c == b || e == a || e == b) continue;
          if (segments_cross(d[a], d[b], d[c], d[e]))
            out.crossings.push_back(Crossing{{a, b}, {c, e}});
        }
  std::sort(out.crossings.begin(), out.crossings.end());
  return out;
}

int responsibility(const CrossingSet& cs, int v) {
  int r = 0;
  for (const Crossing& c : cs.crossings)
    if (c.involves(v)) ++r;
  return r;
}

int responsibility(const Drawing& d, int v) {
  if (v < 0 || v >= d.size())
    throw IndexOutOfRange("responsibility: vertex index " + std::to_string(v) +
                          " out of range for n=" + std::to_string(d.size()));
  return responsibility(count_crossings(d), v);
}

Drawing subdrawing(const Drawing& d, std::span<const int> vertices) {
  std::vector<Point> pts;
  pts.reserve(vertices.size());
  for (int v : vertices) {
    if (v < 0 || v >= d.size())
      throw IndexOutOfRange("subdrawing: vertex index out of range");
    pts.push_back(d[v]);
  }
  return Drawing::unchecked(std::move(pts));
}

}  // namespace recross
