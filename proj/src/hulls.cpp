#include "recross/hulls.hpp"

#include <algorithm>
#include <numeric>

namespace recross {

namespace {

// Andrew monotone chain over vertex indices; CCW starting at the
// lexicographically least point.  General position means no ties beyond
// identical points (excluded) and no collinear hull runs.
std::vector<int> convex_hull_indices(const std::vector<int>& idx,
                                     const std::vector<Point>& pts) {
  std::vector<int> v = idx;
  std::sort(v.begin(), v.end(),
            [&](int a, int b) { return pts[a] < pts[b]; });
  const int m = static_cast<int>(v.size());
  if (m <= 2) return v;
  std::vector<int> h;
  h.reserve(m + 1);
  for (int i = 0; i < m; ++i) {  // lower chain
    while (h.size() >= 2 &&
           cross_z(pts[h[h.size() - 2]],
                   pts[h.back()],
                   pts[v[i]]) <= 0)
      h.pop_back();
    h.push_back(v[i]);
  }
  const size_t lower = h.size();
  for (int i = m - 2; i >= 0; --i) {  // upper chain
    while (h.size() > lower &&
           cross_z(pts[h[h.size() - 2]],
                   pts[h.back()],
                   pts[v[i]]) <= 0)
      h.pop_back();
    h.push_back(v[i]);
  }
  h.pop_back();
  return h;
}

}  // namespace

HullDecomposition peel_hulls(const Drawing& d) {
  HullDecomposition out;
  std::vector<int> rest(static_cast<size_t>(d.size()));
  std::iota(rest.begin(), rest.end(), 0);
  while (!rest.empty()) {
    std::vector<int> layer = convex_hull_indices(rest, d.points());
    std::vector<int> next;
    next.reserve(rest.size() - layer.size());
    for (int v : rest)
      if (std::find(layer.begin(), layer.end(), v) == layer.end())
        next.push_back(v);
    out.layers.push_back(std::move(layer));
    rest = std::move(next);
  }
  return out;
}

bool is_nested_triangle_drawing(const Drawing& d) {
  for (const auto& layer : peel_hulls(d).layers)
    if (layer.size() != 3) return false;
  return true;
}

bool point_in_triangle(Point p, Point a, Point b, Point c) {
  const std::int64_t o1 = cross_z(a, b, p);
  const std::int64_t o2 = cross_z(b, c, p);
  const std::int64_t o3 = cross_z(c, a, p);
  return (o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0);
}

bool point_in_convex_polygon(Point p, std::span<const Point> polygon) {
  const size_t k = polygon.size();
  if (k < 3) return false;
  bool pos = false, neg = false;
  for (size_t i = 0; i < k; ++i) {
    const std::int64_t o = cross_z(polygon[i], polygon[(i + 1) % k], p);
    if (o == 0) return false;
    (o > 0 ? pos : neg) = true;
  }
  return !(pos && neg);
}

char color_char(Color c) {
  switch (c) {
    case Color::Red: return 'r';
    case Color::Green: return 'g';
    case Color::Blue: return 'b';
    case Color::White: return 'w';
  }
  return '?';
}

std::vector<int> ColoredDrawing::vertices_of(Color c) const {
  std::vector<int> out;
  for (int v = 0; v < drawing.size(); ++v)
    if (colors[v] == c) out.push_back(v);
  return out;
}

ColoredDrawing color_by_hulls(const Drawing& d) {
  HullDecomposition hulls = peel_hulls(d);
  const std::vector<int> profile = hulls.profile();
  std::vector<Color> colors(static_cast<size_t>(d.size()), Color::Red);
  auto paint = [&](const std::vector<int>& layer, Color c) {
    for (int v : layer) colors[v] = c;
  };
  if (profile == std::vector<int>{3, 3}) {
    paint(hulls.layers[0], Color::Red);
    paint(hulls.layers[1], Color::Green);
  } else if (profile == std::vector<int>{3, 3, 3}) {
    paint(hulls.layers[0], Color::Red);
    paint(hulls.layers[1], Color::Green);
    paint(hulls.layers[2], Color::Blue);
  } else if (profile == std::vector<int>{3, 3, 3, 1}) {
    paint(hulls.layers[0], Color::Red);
    paint(hulls.layers[1], Color::Green);
    paint(hulls.layers[2], Color::Blue);
    paint(hulls.layers[3], Color::White);
  } else if (profile == std::vector<int>{3, 3, 4}) {
    paint(hulls.layers[0], Color::Red);
    paint(hulls.layers[1], Color::Green);
    paint(hulls.layers[2], Color::Blue);
  } else {
    std::string p;
    for (int s : profile) p += (p.empty() ? "" : ",") + std::to_string(s);
    throw UnsupportedShape("color_by_hulls: unsupported peel profile [" + p + "]");
  }
  return ColoredDrawing{d, std::move(hulls), std::move(colors)};
}

int color_pair_rank(ColorPair p) {
  // rr rb rg rw gb gg gw bb bw ww -- matches the written label forms
  // (rbxrg, rbxgg, gbxbb, rwxgb, ...).
  static constexpr int rank[4][4] = {
      // second: r   g   b   w          first:
      {0, 2, 1, 3},   // r
      {-1, 5, 4, 6},  // g
      {-1, -1, 7, 8},  // b
      {-1, -1, -1, 9},  // w
  };
  return rank[static_cast<int>(p.lo)][static_cast<int>(p.hi)];
}

std::string to_string(ColorPair p) {
  // Pairs read in r,g,b,w order except that mixed pairs keep the
  // conventional rg/rb/gb/rw/gw/bw spelling.
  return std::string{color_char(p.lo)} + color_char(p.hi);
}

int ColorLabel::arity() const {
  bool seen[4] = {false, false, false, false};
  seen[static_cast<int>(a.lo)] = true;
  seen[static_cast<int>(a.hi)] = true;
  seen[static_cast<int>(b.lo)] = true;
  seen[static_cast<int>(b.hi)] = true;
  return static_cast<int>(seen[0]) + static_cast<int>(seen[1]) +
         static_cast<int>(seen[2]) + static_cast<int>(seen[3]);
}

ColorLabel make_color_label(ColorPair a, ColorPair b) {
  return color_pair_rank(a) <= color_pair_rank(b) ? ColorLabel{a, b}
                                                  : ColorLabel{b, a};
}

std::string to_string(const ColorLabel& l) {
  return to_string(l.a) + "x" + to_string(l.b);
}

ColorLabel label_crossing(const Crossing& c, const ColoredDrawing& cd) {
  const ColorPair pa = make_color_pair(cd.color_of(c.edge_a.first),
                                       cd.color_of(c.edge_a.second));
  const ColorPair pb = make_color_pair(cd.color_of(c.edge_b.first),
                                       cd.color_of(c.edge_b.second));
  return make_color_label(pa, pb);
}

LabelTally tally_by_label(const ColoredDrawing& cd) {
  std::vector<Color> present;
  for (Color c : {Color::Red, Color::Green, Color::Blue, Color::White})
    if (!cd.vertices_of(c).empty()) present.push_back(c);

  LabelTally tally;
  std::vector<ColorPair> pairs;
  for (size_t i = 0; i < present.size(); ++i)
    for (size_t j = i; j < present.size(); ++j)
      pairs.push_back(make_color_pair(present[i], present[j]));
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i; j < pairs.size(); ++j)
      tally[make_color_label(pairs[i], pairs[j])] = 0;

  for (const Crossing& c : count_crossings(cd.drawing).crossings)
    ++tally[label_crossing(c, cd)];
  return tally;
}

int tally_get(const LabelTally& t, const std::string& label) {
  for (const auto& [k, v] : t)
    if (to_string(k) == label) return v;
  return 0;
}

namespace {

// Hull cycle of a colour class, as vertex indices; empty if the class is
// not in convex position.
std::vector<int> class_hull_cycle(const ColoredDrawing& cd, Color c) {
  const std::vector<int> verts = cd.vertices_of(c);
  if (verts.size() < 3) return {};
  // reuse peel machinery on the induced sub-drawing
  const Drawing sub = subdrawing(cd.drawing, verts);
  HullDecomposition hd = peel_hulls(sub);
  if (hd.layers.size() != 1) return {};
  std::vector<int> cycle;
  for (int local : hd.layers[0]) cycle.push_back(verts[local]);
  return cycle;
}

}  // namespace

bool are_concentric(const ColoredDrawing& cd, Color outer, Color inner) {
  const std::vector<int> outer_cycle = class_hull_cycle(cd, outer);
  const std::vector<int> inner_cycle = class_hull_cycle(cd, inner);
  if (outer_cycle.empty() || inner_cycle.empty())
    throw UnsupportedShape("are_concentric: colour classes must be convex polygons");
  // nested: every inner vertex strictly inside the outer hull
  std::vector<Point> outer_hull_pts;
  for (int v : outer_cycle) outer_hull_pts.push_back(cd.drawing[v]);
  for (int v : inner_cycle)
    if (!point_in_convex_polygon(cd.drawing[v], outer_hull_pts))
      throw UnsupportedShape("are_concentric: polygons are not nested");

  auto boundary_edges = [&](const std::vector<int>& cycle) {
    std::vector<VertexPair> out;
    const size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i)
      out.push_back(make_edge(cycle[i], cycle[(i + 1) % k]));
    return out;
  };
  std::vector<VertexPair> polygon_edges = boundary_edges(outer_cycle);
  for (VertexPair e : boundary_edges(inner_cycle)) polygon_edges.push_back(e);

  for (int u : cd.vertices_of(outer))
    for (int v : cd.vertices_of(inner))
      for (VertexPair e : polygon_edges) {
        if (e.first == u || e.second == u || e.first == v || e.second == v)
          continue;
        if (segments_cross(cd.drawing[u], cd.drawing[v], cd.drawing[e.first],
                           cd.drawing[e.second]))
          return false;
      }
  return true;
}

int count_non_concentric_crossings(const ColoredDrawing& cd) {
  if (cd.hulls.profile() != std::vector<int>{3, 3})
    throw UnsupportedShape(
        "count_non_concentric_crossings: expected nested K6 (peel [3,3])");
  const std::vector<int>& outer = cd.hulls.layers[0];
  const std::vector<int>& inner = cd.hulls.layers[1];
  int count = 0;
  // inner-hull edges vs inner-to-outer edges
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      for (int a : inner)
        for (int o : outer) {
          if (a == inner[i] || a == inner[j]) continue;
          if (segments_cross(cd.drawing[inner[i]], cd.drawing[inner[j]],
                             cd.drawing[a], cd.drawing[o]))
            ++count;
        }
  return count;
}

}  // namespace recross
