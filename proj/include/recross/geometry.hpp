#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recross {

// Coordinates are capped so that the 3x3 orientation determinant of any
// three in-range points fits comfortably in a signed 64-bit integer.
inline constexpr std::int64_t kCoordBound = 1'000'000;

// A planar point with exact integer coordinates.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

// Signed area form: z-component of (q - p) x (r - p).
constexpr std::int64_t cross_z(Point p, Point q, Point r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

constexpr Orientation orientation(Point p, Point q, Point r) {
  const std::int64_t c = cross_z(p, q, r);
  if (c > 0) return Orientation::CounterClockwise;
  if (c < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

// Raised when a point set breaks the no-three-collinear / all-distinct
// requirement.  Indices identify the offending vertices; for duplicate
// points only i and j are meaningful and k is -1.
struct GeneralPositionViolation : std::runtime_error {
  GeneralPositionViolation(std::string msg, int a, int b, int c)
      : std::runtime_error(std::move(msg)), i(a), j(b), k(c) {}
  int i;
  int j;
  int k;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

bool is_general_position(std::span<const Point> pts);

// First duplicate pair {i, j, -1} or collinear triple {i, j, k}, if any.
std::optional<std::array<int, 3>> find_degenerate_triple(std::span<const Point> pts);

// True iff the open interiors of segments (a1,a2) and (b1,b2) intersect.
// Segments that merely share an endpoint do not cross.  Assumes general
// position among the involved points; zero-length segments are rejected.
bool segments_cross(Point a1, Point a2, Point b1, Point b2);

// An indexed general-position point set standing for a rectilinear drawing
// of the complete graph on its vertices.  Construction validates vertex
// count, coordinate bounds, distinctness and general position; violations
// are hard errors, never repaired.
class Drawing {
 public:
  explicit Drawing(std::vector<Point> pts);

  // Skips validation.  For internal use where the invariants are
  // maintained incrementally (search moves, generators).
  static Drawing unchecked(std::vector<Point> pts) {
    return Drawing(Unchecked{}, std::move(pts));
  }

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  struct Unchecked {};
  Drawing(Unchecked, std::vector<Point> pts) : points_(std::move(pts)) {}

  std::vector<Point> points_;
};

// An unordered pair of vertex indices, stored sorted.
using VertexPair = std::pair<int, int>;

constexpr VertexPair make_edge(int a, int b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// One crossing between two vertex-disjoint edges, in canonical order:
// both pairs sorted, edge_a lexicographically before edge_b.
struct Crossing {
  VertexPair edge_a;
  VertexPair edge_b;

  friend constexpr auto operator<=>(const Crossing&, const Crossing&) = default;

  bool involves(int v) const {
    return edge_a.first == v || edge_a.second == v || edge_b.first == v ||
           edge_b.second == v;
  }
};

constexpr Crossing make_crossing(VertexPair e, VertexPair f) {
  return e < f ? Crossing{e, f} : Crossing{f, e};
}

// All crossings of a drawing, sorted canonically and duplicate-free.
struct CrossingSet {
  std::vector<Crossing> crossings;

  int count() const { return static_cast<int>(crossings.size()); }
};

CrossingSet count_crossings(const Drawing& d);

// Number of crossings on edges incident to vertex v.
int responsibility(const Drawing& d, int v);
int responsibility(const CrossingSet& cs, int v);

// The induced sub-drawing on the given vertex indices (order preserved).
Drawing subdrawing(const Drawing& d, std::span<const int> vertices);

}  // namespace recross
