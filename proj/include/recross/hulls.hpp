#pragma once

#include <map>
#include <string>
#include <vector>

#include "recross/geometry.hpp"

namespace recross {

struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterated convex hulls: layer 0 is the convex hull of the whole drawing,
// layer i the hull of what remains inside layer i-1.  Each layer is listed
// counter-clockwise starting from its lexicographically least vertex.
struct HullDecomposition {
  std::vector<std::vector<int>> layers;

  std::vector<int> profile() const {
    std::vector<int> p;
    p.reserve(layers.size());
    for (const auto& l : layers) p.push_back(static_cast<int>(l.size()));
    return p;
  }
};

HullDecomposition peel_hulls(const Drawing& d);

// True iff every peel layer is a triangle.
bool is_nested_triangle_drawing(const Drawing& d);

// Strict containment tests.  Polygon vertices must be in convex position;
// boundary incidences never occur under general position.
bool point_in_triangle(Point p, Point a, Point b, Point c);
bool point_in_convex_polygon(Point p, std::span<const Point> polygon);

enum class Color : unsigned char { Red = 0, Green = 1, Blue = 2, White = 3 };

char color_char(Color c);

// Hull-peel colouring: outer triangle red, second green, inner blue.  The
// supported peel profiles and their colour maps are
//   [3,3]     -> red, green                        (nested K6)
//   [3,3,3]   -> red, green, blue                  (nested K9)
//   [3,3,3,1] -> red, green, blue + white innermost vertex
//   [3,3,4]   -> red, green, all-blue inner quadrilateral
// Anything else is UnsupportedShape.
struct ColoredDrawing {
  Drawing drawing;
  HullDecomposition hulls;
  std::vector<Color> colors;  // one per vertex

  Color color_of(int v) const { return colors[v]; }
  std::vector<int> vertices_of(Color c) const;
};

ColoredDrawing color_by_hulls(const Drawing& d);

// An unordered colour pair, stored in r < g < b < w order.
struct ColorPair {
  Color lo;
  Color hi;

  friend constexpr auto operator<=>(const ColorPair&, const ColorPair&) = default;
};

constexpr ColorPair make_color_pair(Color a, Color b) {
  return static_cast<int>(a) <= static_cast<int>(b) ? ColorPair{a, b}
                                                    : ColorPair{b, a};
}

// Display/canonical rank of a colour pair: rr rb rg rw gb gg gw bb bw ww.
int color_pair_rank(ColorPair p);
std::string to_string(ColorPair p);

// Canonical crossing label: two colour pairs ordered by rank, e.g. rbxrg
// (never rgxrb).  Arity is the number of distinct endpoint colours.
struct ColorLabel {
  ColorPair a;
  ColorPair b;

  int arity() const;

  friend bool operator==(const ColorLabel&, const ColorLabel&) = default;
  friend bool operator<(const ColorLabel& x, const ColorLabel& y) {
    const int ra = color_pair_rank(x.a), rb = color_pair_rank(y.a);
    if (ra != rb) return ra < rb;
    return color_pair_rank(x.b) < color_pair_rank(y.b);
  }
};

ColorLabel make_color_label(ColorPair a, ColorPair b);
std::string to_string(const ColorLabel& l);

ColorLabel label_crossing(const Crossing& c, const ColoredDrawing& cd);

// Exhaustive histogram over every canonical label formed from the colours
// present in the drawing; absent labels are explicit zeros.
using LabelTally = std::map<ColorLabel, int>;

LabelTally tally_by_label(const ColoredDrawing& cd);

int tally_get(const LabelTally& t, const std::string& label);

// True iff no edge joining the two colour classes crosses the boundary
// polygon of either class.  Both classes must be in convex position with
// the inner one strictly inside the outer hull.
bool are_concentric(const ColoredDrawing& cd, Color outer, Color inner);

// Crossings between inner-hull edges and inner-to-outer edges of a nested
// K6 (peel [3,3]).
int count_non_concentric_crossings(const ColoredDrawing& cd);

}  // namespace recross
