#include "recross/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "recross/bounds.hpp"
#include "recross/generate.hpp"
#include "recross/parallel.hpp"

namespace recross {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RECROSS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

int crossing_count_raw(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  int count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = a + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          if (c == b || e == b) continue;
          if (segments_cross(pts[a], pts[b], pts[c], pts[e])) ++count;
        }
  return count;
}

// Would replacing vertex v by q keep the set in general position and in
// the coordinate box [lo, hi]^2?
bool move_ok(const std::vector<Point>& pts, int v, Point q, std::int64_t lo,
             std::int64_t hi) {
  if (q.x < lo || q.x > hi || q.y < lo || q.y > hi) return false;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    if (i != v && pts[i] == q) return false;
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == v) continue;
      if (orientation(pts[i], pts[j], q) == Orientation::Collinear) return false;
    }
  }
  return true;
}

std::vector<Point> random_start(SplitMix64& rng, int n, std::int64_t box) {
  std::vector<Point> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    const Point q{rng.range(0, box), rng.range(0, box)};
    bool ok = true;
    for (const Point& p : pts)
      if (p == q) ok = false;
    for (size_t i = 0; ok && i < pts.size(); ++i)
      for (size_t j = i + 1; ok && j < pts.size(); ++j)
        if (orientation(pts[i], pts[j], q) == Orientation::Collinear) ok = false;
    if (ok) pts.push_back(q);
  }
  return pts;
}

struct DescentOutcome {
  std::vector<Point> pts;
  int count;
};

// Strict-improvement descent by single-vertex integer moves.  Rejected
// moves consume the same stream positions in every run, keeping the walk
// reproducible.
DescentOutcome descend(std::vector<Point> pts, int count, int moves,
                       SplitMix64& rng, std::int64_t lo, std::int64_t hi,
                       std::int64_t perturb_radius, bool allow_plateau) {
  const int n = static_cast<int>(pts.size());
  int scale_bits = 1;
  while ((std::int64_t{1} << scale_bits) < hi - lo) ++scale_bits;
  for (int m = 0; m < moves; ++m) {
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::int64_t s = perturb_radius;
    if (s <= 0) s = std::int64_t{1} << rng.below(static_cast<std::uint64_t>(scale_bits) + 1);
    const std::int64_t dx = rng.range(-s, s);
    const std::int64_t dy = rng.range(-s, s);
    if (dx == 0 && dy == 0) continue;
    const Point old = pts[v];
    const Point cand{old.x + dx, old.y + dy};
    if (!move_ok(pts, v, cand, lo, hi)) continue;
    pts[v] = cand;
    const int c = crossing_count_raw(pts);
    if (c < count || (allow_plateau && c == count)) {
      count = c;
    } else {
      pts[v] = old;
    }
  }
  return DescentOutcome{std::move(pts), count};
}

}  // namespace

SearchResult local_search(const SearchParams& params) {
  if (params.n < 3 || params.restarts < 1 || params.moves_per_restart < 1 ||
      params.box_size < 2 || params.box_size > kCoordBound)
    throw std::invalid_argument("local_search: bad parameters");

  std::vector<DescentOutcome> outcomes(static_cast<size_t>(params.restarts),
                                       DescentOutcome{{}, -1});
  const int threads = resolve_threads(params.threads);
  parallel_for(params.restarts, threads, [&](int r) {
    SplitMix64 rng(mix_seed(params.master_seed, 0x7265737461727431ULL,
                            static_cast<std::uint64_t>(r)));
    std::vector<Point> pts = random_start(rng, params.n, params.box_size);
    const int start_count = crossing_count_raw(pts);
    outcomes[r] =
        descend(std::move(pts), start_count, params.moves_per_restart, rng, 0,
                params.box_size, params.perturb_radius, params.allow_plateau);
  });

  // merge in (count, lexicographic points) order, independent of schedule
  int best_idx = 0;
  for (int r = 1; r < params.restarts; ++r) {
    const DescentOutcome& a = outcomes[r];
    const DescentOutcome& b = outcomes[best_idx];
    if (a.count < b.count || (a.count == b.count && a.pts < b.pts)) best_idx = r;
  }

  SearchResult out{Drawing::unchecked(outcomes[best_idx].pts),
                   outcomes[best_idx].count,
                   {},
                   {}};
  out.history.reserve(static_cast<size_t>(params.restarts));
  for (const DescentOutcome& o : outcomes) out.history.push_back(o.count);
  out.seed_trace = "n=" + std::to_string(params.n) +
                   " restarts=" + std::to_string(params.restarts) +
                   " moves=" + std::to_string(params.moves_per_restart) +
                   " box=" + std::to_string(params.box_size) +
                   " seed=" + std::to_string(params.master_seed) +
                   " perturb=" + std::to_string(params.perturb_radius) +
                   " plateau=" + (params.allow_plateau ? "1" : "0");

  // hard consistency: a result below the known lower bound is impossible
  const long long floor_n = known_lower_bound(params.n);
  if (out.count < floor_n)
    throw std::logic_error("local_search: count " + std::to_string(out.count) +
                           " undercuts the lower bound " +
                           std::to_string(floor_n) + " for n=" +
                           std::to_string(params.n));
  return out;
}

SearchParams default_search_params(int n) {
  SearchParams p;
  p.n = n;
  p.master_seed = 42;
  p.box_size = 1000;
  if (n <= 6) {
    p.restarts = 8;
    p.moves_per_restart = 3000;
  } else if (n <= 8) {
    p.restarts = 16;
    p.moves_per_restart = 8000;
  } else if (n == 9) {
    p.restarts = 32;
    p.moves_per_restart = 15000;
  } else {
    p.restarts = 128;
    p.moves_per_restart = 40000;
  }
  return p;
}

Drawing improve_drawing(const Drawing& d, int move_budget, std::uint64_t seed) {
  if (move_budget <= 0) return d;
  SplitMix64 rng(mix_seed(seed, 0x696d70726f7665ULL));
  DescentOutcome o = descend(d.points(), crossing_count_raw(d.points()),
                             move_budget, rng, -kCoordBound, kCoordBound, 0,
                             /*allow_plateau=*/false);
  return Drawing::unchecked(std::move(o.pts));
}

SearchResult grid_exhaustive(int n, int grid_w, int grid_h) {
  if (n < 3 || grid_w < 2 || grid_h < 2)
    throw std::invalid_argument("grid_exhaustive: bad parameters");
  const int cells = grid_w * grid_h;
  if (n > cells) throw std::invalid_argument("grid_exhaustive: n exceeds grid");

  // subset-count guard, saturating
  long double estimate = 1.0L;
  for (int i = 0; i < n; ++i) estimate = estimate * (cells - i) / (i + 1);
  if (estimate > 1e8L)
    throw BudgetExceeded("grid_exhaustive: more than 1e8 subsets");

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<Point> pts(n);
  std::vector<Point> best_pts;
  int best = -1;
  auto cell_point = [&](int c) {
    return Point{c / grid_h, c % grid_h};  // lexicographic cell order
  };
  while (true) {
    for (int i = 0; i < n; ++i) pts[i] = cell_point(idx[i]);
    if (is_general_position(pts)) {
      const int c = crossing_count_raw(pts);
      if (best < 0 || c < best) {
        best = c;
        best_pts = pts;
        if (best == 0) break;  // cannot improve
      }
    }
    // next lexicographic combination
    int i = n - 1;
    while (i >= 0 && idx[i] == cells - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (best < 0)
    throw std::runtime_error("grid_exhaustive: no general-position subset");
  SearchResult out{Drawing::unchecked(std::move(best_pts)), best, {}, {}};
  out.seed_trace = "grid=" + std::to_string(grid_w) + "x" +
                   std::to_string(grid_h) + " n=" + std::to_string(n) +
                   " exhaustive";
  return out;
}

}  // namespace recross
