#include "recross/generate.hpp"

#include <algorithm>

namespace recross {

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % n;
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  SplitMix64 s(a);
  s.state ^= 0x632be59bd9b4e019ULL * (b + 1);
  s.next();
  s.state ^= 0x9e6c63d0876a9a47ULL * (c + 1);
  s.next();
  return s.next();
}

namespace {

struct Triangle {
  Point a, b, c;

  std::int64_t area2() const {
    const std::int64_t v = cross_z(a, b, c);
    return v < 0 ? -v : v;
  }
};

Point sample_in_triangle(SplitMix64& rng, const Triangle& t, int budget = kGenerationBudget) {
  const std::int64_t xlo = std::min({t.a.x, t.b.x, t.c.x});
  const std::int64_t xhi = std::max({t.a.x, t.b.x, t.c.x});
  const std::int64_t ylo = std::min({t.a.y, t.b.y, t.c.y});
  const std::int64_t yhi = std::max({t.a.y, t.b.y, t.c.y});
  for (int i = 0; i < budget; ++i) {
    const Point p{rng.range(xlo, xhi), rng.range(ylo, yhi)};
    if (point_in_triangle(p, t.a, t.b, t.c)) return p;
  }
  throw GenerationBudgetExceeded("sample_in_triangle: no interior point", budget);
}

Triangle shrink_toward_centroid(const Triangle& t) {
  const Point c{(t.a.x + t.b.x + t.c.x) / 3, (t.a.y + t.b.y + t.c.y) / 3};
  auto mid = [&](Point p) { return Point{c.x + (p.x - c.x) / 2, c.y + (p.y - c.y) / 2}; };
  return Triangle{mid(t.a), mid(t.b), mid(t.c)};
}

constexpr std::int64_t kGenBox = 10000;

Triangle random_fat_triangle(SplitMix64& rng, std::int64_t box,
                             std::int64_t min_area2) {
  for (int i = 0; i < kGenerationBudget; ++i) {
    const Triangle t{{rng.range(-box, box), rng.range(-box, box)},
                     {rng.range(-box, box), rng.range(-box, box)},
                     {rng.range(-box, box), rng.range(-box, box)}};
    if (t.area2() >= min_area2) return t;
  }
  throw GenerationBudgetExceeded("random_fat_triangle", kGenerationBudget);
}

bool peel_profile_is(const std::vector<Point>& pts, const std::vector<int>& want) {
  if (!is_general_position(pts)) return false;
  return peel_hulls(Drawing::unchecked(pts)).profile() == want;
}

// Inner rings are sampled from a shrunken copy of the enclosing triangle so
// the next ring has room.
std::vector<Point> nested_k9_points(SplitMix64& rng) {
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    try {
      const Triangle outer = random_fat_triangle(rng, kGenBox, kGenBox * kGenBox);
      const Triangle outer_core = shrink_toward_centroid(outer);
      const Triangle green{sample_in_triangle(rng, outer_core),
                           sample_in_triangle(rng, outer_core),
                           sample_in_triangle(rng, outer_core)};
      if (green.area2() < kGenBox * kGenBox / 64) continue;
      const Triangle green_core = shrink_toward_centroid(green);
      const Triangle blue{sample_in_triangle(rng, green_core),
                          sample_in_triangle(rng, green_core),
                          sample_in_triangle(rng, green_core)};
      if (blue.area2() < 2000) continue;
      const std::vector<Point> pts = {outer.a, outer.b, outer.c, green.a, green.b,
                                      green.c, blue.a,  blue.b,  blue.c};
      if (peel_profile_is(pts, {3, 3, 3})) return pts;
    } catch (const GenerationBudgetExceeded&) {
      continue;
    }
  }
  throw GenerationBudgetExceeded("nested_k9_points", kGenerationBudget);
}

}  // namespace

Drawing random_drawing(std::uint64_t seed, int n, std::int64_t box) {
  SplitMix64 rng(mix_seed(seed, 0x7261776472617720ULL));
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({rng.range(0, box), rng.range(0, box)});
    if (is_general_position(pts)) return Drawing::unchecked(std::move(pts));
  }
  throw GenerationBudgetExceeded("random_drawing", kGenerationBudget);
}

Drawing generate_nested_k9(std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x6b396e6573746564ULL));
  return Drawing::unchecked(nested_k9_points(rng));
}

Drawing generate_nested_k6_any(std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x6b366e6573746564ULL));
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    const Triangle outer = random_fat_triangle(rng, kGenBox, kGenBox * kGenBox);
    const Triangle outer_core = shrink_toward_centroid(outer);
    const Triangle inner{sample_in_triangle(rng, outer_core),
                         sample_in_triangle(rng, outer_core),
                         sample_in_triangle(rng, outer_core)};
    if (inner.area2() < 32) continue;
    const std::vector<Point> pts = {outer.a, outer.b, outer.c,
                                    inner.a, inner.b, inner.c};
    if (peel_profile_is(pts, {3, 3})) return Drawing::unchecked(pts);
  }
  throw GenerationBudgetExceeded("generate_nested_k6_any", kGenerationBudget);
}

Drawing generate_nested_k6(std::uint64_t seed, ConfigClass cls) {
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    Drawing d = generate_nested_k6_any(mix_seed(seed, 0xcf5, static_cast<std::uint64_t>(attempt)));
    if (classify_configuration(color_by_hulls(d)).cls == cls) return d;
  }
  throw GenerationBudgetExceeded(
      std::string("generate_nested_k6: class ") + to_string(cls),
      kGenerationBudget);
}

Drawing generate_k10(std::uint64_t seed, K10Shape shape) {
  SplitMix64 rng(mix_seed(seed, 0x6b313073686170ULL, static_cast<std::uint64_t>(shape)));
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    try {
      if (shape == K10Shape::TriTriQuad) {
        const Triangle outer = random_fat_triangle(rng, kGenBox, kGenBox * kGenBox);
        const Triangle outer_core = shrink_toward_centroid(outer);
        const Triangle mid{sample_in_triangle(rng, outer_core),
                           sample_in_triangle(rng, outer_core),
                           sample_in_triangle(rng, outer_core)};
        if (mid.area2() < kGenBox * kGenBox / 64) continue;
        const Triangle mid_core = shrink_toward_centroid(mid);
        std::vector<Point> pts = {outer.a, outer.b, outer.c, mid.a, mid.b, mid.c};
        for (int i = 0; i < 4; ++i) pts.push_back(sample_in_triangle(rng, mid_core));
        if (peel_profile_is(pts, {3, 3, 4})) return Drawing::unchecked(pts);
        continue;
      }
      std::vector<Point> pts = nested_k9_points(rng);
      const Triangle green{pts[3], pts[4], pts[5]};
      const Triangle blue{pts[6], pts[7], pts[8]};
      const Point w = sample_in_triangle(
          rng, shape == K10Shape::WhiteInBlue ? blue : green);
      if (shape == K10Shape::WhiteInGreen &&
          point_in_triangle(w, blue.a, blue.b, blue.c))
        continue;
      pts.push_back(w);
      const std::vector<int> want = shape == K10Shape::WhiteInBlue
                                        ? std::vector<int>{3, 3, 3, 1}
                                        : std::vector<int>{3, 3, 4};
      if (peel_profile_is(pts, want)) return Drawing::unchecked(pts);
    } catch (const GenerationBudgetExceeded&) {
      continue;
    }
  }
  throw GenerationBudgetExceeded("generate_k10", kGenerationBudget);
}

const std::vector<Point>& optimal_k9_base() {
  static const std::vector<Point> base = {
      {0, 100}, {-87, -50}, {87, -50}, {1, 28}, {-26, -15},
      {25, -15}, {2, 9},    {-8, -4},  {5, -3}};
  return base;
}

Drawing generate_optimal_k9(std::uint64_t seed) {
  SplitMix64 rng(mix_seed(seed, 0x6f70746b39ULL));
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    // orientation-preserving integer affine map
    std::int64_t a, b, c, d;
    do {
      a = rng.range(-3, 3);
      b = rng.range(-3, 3);
      c = rng.range(-3, 3);
      d = rng.range(-3, 3);
    } while (a * d - b * c <= 0);
    const std::int64_t tx = rng.range(-4000, 4000);
    const std::int64_t ty = rng.range(-4000, 4000);
    std::vector<Point> pts;
    for (Point p : optimal_k9_base())
      pts.push_back({a * p.x + b * p.y + tx, c * p.x + d * p.y + ty});
    if (!peel_profile_is(pts, {3, 3, 3})) continue;
    if (count_crossings(Drawing::unchecked(pts)).count() != 36) continue;

    // count-preserving single-vertex jiggles for order-type variety
    const int tries = 40;
    for (int t = 0; t < tries; ++t) {
      const int v = static_cast<int>(rng.below(9));
      const Point old = pts[v];
      const Point cand{old.x + rng.range(-4, 4), old.y + rng.range(-4, 4)};
      if (cand == old) continue;
      pts[v] = cand;
      if (!peel_profile_is(pts, {3, 3, 3}) ||
          count_crossings(Drawing::unchecked(pts)).count() != 36)
        pts[v] = old;
    }
    return Drawing::unchecked(pts);
  }
  throw GenerationBudgetExceeded("generate_optimal_k9", kGenerationBudget);
}

Drawing generate_k9_profile(std::uint64_t seed, K9Profile profile) {
  SplitMix64 rng(mix_seed(seed, 0x6b3970726f66ULL, static_cast<std::uint64_t>(profile)));
  const int inner_hull_size =
      profile == K9Profile::Hull6 ? 6 : (profile == K9Profile::Hull5_1 ? 5 : 4);
  const std::vector<int> want =
      profile == K9Profile::Hull6
          ? std::vector<int>{3, 6}
          : (profile == K9Profile::Hull5_1 ? std::vector<int>{3, 5, 1}
                                           : std::vector<int>{3, 4, 2});
  for (int attempt = 0; attempt < kGenerationBudget; ++attempt) {
    const Triangle outer = random_fat_triangle(rng, kGenBox, kGenBox * kGenBox);
    const Triangle core = shrink_toward_centroid(outer);
    std::vector<Point> ring;
    for (int i = 0; i < inner_hull_size; ++i)
      ring.push_back(sample_in_triangle(rng, core));
    if (!is_general_position(ring)) continue;
    const HullDecomposition ring_hd = peel_hulls(Drawing::unchecked(ring));
    if (static_cast<int>(ring_hd.layers[0].size()) != inner_hull_size)
      continue;  // second hull must be in convex position
    // cycle order, as point_in_convex_polygon expects
    std::vector<Point> cycle;
    for (int i : ring_hd.layers[0]) cycle.push_back(ring[i]);
    std::int64_t xlo = cycle[0].x, xhi = cycle[0].x, ylo = cycle[0].y, yhi = cycle[0].y;
    for (const Point& p : cycle) {
      xlo = std::min(xlo, p.x);
      xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y);
      yhi = std::max(yhi, p.y);
    }
    std::vector<Point> pts = {outer.a, outer.b, outer.c};
    pts.insert(pts.end(), cycle.begin(), cycle.end());
    const int interior = 6 - inner_hull_size;
    bool ok = true;
    for (int i = 0; i < interior && ok; ++i) {
      bool placed = false;
      for (int t = 0; t < 1000; ++t) {
        const Point p{rng.range(xlo, xhi), rng.range(ylo, yhi)};
        if (point_in_convex_polygon(p, std::span<const Point>(cycle))) {
          pts.push_back(p);
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    if (peel_profile_is(pts, want)) return Drawing::unchecked(pts);
  }
  throw GenerationBudgetExceeded("generate_k9_profile", kGenerationBudget);
}

}  // namespace recross
