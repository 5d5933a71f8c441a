// Acceptance suite: one line per criterion, exit code = number of failures.
// Optional argv[1] is the CLI binary, used for the end-to-end checks.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "recross/bounds.hpp"
#include "recross/io.hpp"
#include "recross/rules.hpp"
#include "recross/search.hpp"

using namespace recross;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

void criterion_1_bounds(const std::string& cli) {
  const auto start = Clock::now();
  const BoundsTable t = recursive_lower_bound(400);
  const auto [lo, hi] = nu_star_bracket();
  bool ok = t.row(11).lower == 98 && t.row(400).lower == BigInt("315356975") &&
            binomial(400, 4) == BigInt("1050739900") &&
            t.row(400).ratio == BigRat(BigInt("315356975"), BigInt("1050739900")) &&
            format_decimal(t.row(400).ratio, 4) == "0.3001" &&
            hi == BigRat(6467, 16848) && format_decimal(hi, 4) == "0.3838";
  const double secs = seconds_since(start);
  ok = ok && secs < 1.0;
  if (!cli.empty()) {
    const std::string out = run_cli(cli, "bounds --max-n 400");
    ok = ok && out.find("400\t315356975\t") != std::string::npos &&
         out.find("315356975/1050739900") != std::string::npos;
  }
  report(1, "recursive bounds: b(11)=98, b(400)=315356975, ratio 0.3001..., "
            "bracket upper 6467/16848 = 0.3838...",
         ok, "elapsed " + std::to_string(secs) + "s");
}

void criterion_2_jensen() {
  const auto start = Clock::now();
  const bool ok = jensen_upper(10) == 63 && jensen_upper(11) == 102 &&
                  jensen_upper(12) == 156 && seconds_since(start) < 1.0;
  report(2, "closed-form upper bound: j(10)=63, j(11)=102, j(12)=156", ok);
}

void criterion_3_candidates() {
  report(3, "K11 candidate set is {98, 100, 102}",
         k11_candidates() == std::vector<int>{98, 100, 102});
}

void criterion_4_search() {
  const int want[11] = {0, 0, 0, 0, 0, 1, 3, 9, 19, 36, 62};
  const auto start_small = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 9; ++n) {
    const SearchResult r = local_search(default_search_params(n));
    const int verify = count_crossings(r.best).count();
    if (r.count != want[n] || verify != r.count ||
        r.count < known_lower_bound(n)) {
      ok = false;
      detail += "n=" + std::to_string(n) + " got " + std::to_string(r.count) + "; ";
    }
  }
  const double small_secs = seconds_since(start_small);
  if (small_secs >= 60.0) {
    ok = false;
    detail += "n<=9 took " + std::to_string(small_secs) + "s; ";
  }
  const auto start_ten = Clock::now();
  const SearchResult r10 = local_search(default_search_params(10));
  const double ten_secs = seconds_since(start_ten);
  if (r10.count != 62 || count_crossings(r10.best).count() != 62 ||
      ten_secs >= 600.0) {
    ok = false;
    detail += "n=10 got " + std::to_string(r10.count) + " in " +
              std::to_string(ten_secs) + "s";
  }
  report(4, "default-budget search reaches 0,0,1,3,9,19,36 (n=3..9) and 62 "
            "(n=10), all re-verified, never below the lower bound",
         ok,
         detail.empty() ? "n<=9 in " + std::to_string(small_secs) +
                              "s, n=10 in " + std::to_string(ten_secs) + "s"
                        : detail);
}

void criterion_5_grid() {
  const auto start = Clock::now();
  const SearchResult g4 = grid_exhaustive(4, 4, 4);
  const SearchResult g5 = grid_exhaustive(5, 4, 4);
  const SearchResult g6 = grid_exhaustive(6, 5, 5);
  bool ok = g4.count == 0 && g5.count == 1 && g6.count == 3;

  // search restricted to the same boxes never beats the oracle
  SearchParams p;
  p.master_seed = 42;
  p.restarts = 8;
  p.moves_per_restart = 2000;
  p.n = 4;
  p.box_size = 3;
  ok = ok && local_search(p).count >= g4.count;
  p.n = 5;
  ok = ok && local_search(p).count >= g5.count;
  p.n = 6;
  p.box_size = 4;
  ok = ok && local_search(p).count >= g6.count;
  const double secs = seconds_since(start);
  ok = ok && secs < 120.0;
  report(5, "grid oracle: min 0 (n=4, 4x4), 1 (n=5, 4x4), 3 (n=6, 5x5); "
            "box-restricted search never beats it",
         ok, "elapsed " + std::to_string(secs) + "s");
}

void criterion_6_suites() {
  const auto start = Clock::now();
  SuiteOptions opts;
  opts.rules = suite_rules("all");
  opts.instances = 1000;
  opts.master_seed = 42;
  const SuiteResult r = run_suite(opts);
  const double secs = seconds_since(start);
  const bool ok = r.failures == 0 && secs < 300.0;
  // note: the gbxbb <= 2 clause of nine_max has a genuine pinned
  // counterexample (tests/data/k9_optimal_vvv.pts, found at other seeds and
  // independently re-verified); this seeded sample contains none.
  report(6, "all lemma rules over 1000 seeded instances each, zero failures",
         ok,
         "checked " + std::to_string(r.checked) + ", vacuous " +
             std::to_string(r.vacuous) + ", failures " +
             std::to_string(r.failures) + ", elapsed " + std::to_string(secs) +
             "s; nine_max's gbxbb<=2 clause has a pinned counterexample "
             "witness outside this sample");
}

void criterion_7_identities() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;

  SplitMix64 rng(20260810);
  for (int i = 0; i < 10000 && ok; ++i) {
    const int n = 4 + static_cast<int>(rng.below(6));
    const Drawing d = random_drawing(rng.next(), n, 10000);
    const CrossingSet cs = count_crossings(d);
    long long sum = 0;
    for (int v = 0; v < n; ++v) sum += responsibility(cs, v);
    if (sum != 4LL * cs.count()) {
      ok = false;
      detail = "responsibility identity failed at iteration " + std::to_string(i);
    }
  }

  const std::vector<std::vector<Point>> rings = {
      {{995, 100}, {-100, 995}, {-995, -100}, {100, -995}},
      {{995, 100}, {213, 977}, {-864, 504}, {-746, -666}, {402, -915}},
      {{995, 100}, {411, 912}, {-584, 812}, {-995, -100}, {-411, -912}, {584, -812}},
      {{995, 100}, {542, 840}, {-319, 948}, {-940, 342}, {-853, -522}, {-124, -992}, {698, -716}},
      {{995, 100}, {633, 774}, {-100, 995}, {-774, 633}, {-995, -100}, {-633, -774}, {100, -995}, {774, -633}},
      {{995, 100}, {698, 716}, {74, 997}, {-584, 812}, {-969, 246}, {-901, -434}, {-411, -912}, {271, -963}, {826, -563}},
  };
  const int expected[] = {1, 5, 15, 35, 70, 126};
  for (size_t i = 0; i < rings.size(); ++i)
    if (count_crossings(Drawing(rings[i])).count() != expected[i]) {
      ok = false;
      detail = "convex-position law failed at n=" + std::to_string(i + 4);
    }

  for (int iter = 0; iter < 1000 && ok; ++iter) {
    const int n = 5 + static_cast<int>(rng.below(5));
    const Drawing d = random_drawing(rng.next(), n, 2000);
    std::int64_t a, b, c, e;
    do {
      a = rng.range(-3, 3);
      b = rng.range(-3, 3);
      c = rng.range(-3, 3);
      e = rng.range(-3, 3);
    } while (a * e - b * c <= 0);
    const std::int64_t tx = rng.range(-1000, 1000), ty = rng.range(-1000, 1000);
    std::vector<Point> mapped, shuffled = d.points();
    for (const Point& p : d.points())
      mapped.push_back({a * p.x + b * p.y + tx, c * p.x + e * p.y + ty});
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    const int base = count_crossings(d).count();
    if (count_crossings(Drawing::unchecked(mapped)).count() != base ||
        count_crossings(Drawing::unchecked(shuffled)).count() != base) {
      ok = false;
      detail = "invariance failed at iteration " + std::to_string(iter);
    }
  }

  const double secs = seconds_since(start);
  ok = ok && secs < 60.0;
  report(7, "responsibility identity on 10000 drawings, convex-position law "
            "n=4..9, affine/relabeling invariance on 1000 transform pairs",
         ok, detail.empty() ? "elapsed " + std::to_string(secs) + "s" : detail);
}

void criterion_8_determinism(const std::string& cli) {
  SuiteOptions opts;
  opts.rules = suite_rules("k10");
  opts.instances = 40;
  opts.master_seed = 7;
  opts.threads = 1;
  const std::string verify_serial = run_suite(opts).text();
  opts.threads = 4;
  const std::string verify_parallel = run_suite(opts).text();

  SearchParams p = default_search_params(8);
  p.master_seed = 7;
  p.threads = 1;
  const SearchResult s1 = local_search(p);
  p.threads = 4;
  const SearchResult s2 = local_search(p);

  bool ok = verify_serial == verify_parallel && s1.best == s2.best &&
            s1.count == s2.count && s1.history == s2.history;

  if (!cli.empty()) {
    const std::string args = "verify --suite k9 --instances 20 --seed 5";
    setenv("RECROSS_THREADS", "1", 1);
    const std::string a = run_cli(cli, args);
    setenv("RECROSS_THREADS", "4", 1);
    const std::string b = run_cli(cli, args);
    unsetenv("RECROSS_THREADS");
    ok = ok && !a.empty() && a == b;
  }
  report(8, "verify and search are byte-identical across thread counts", ok);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_1_bounds(cli);
  criterion_2_jensen();
  criterion_3_candidates();
  criterion_4_search();
  criterion_5_grid();
  criterion_6_suites();
  criterion_7_identities();
  criterion_8_determinism(cli);
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(g_failures) + " CRITERIA FAILED")
            << std::endl;
  return g_failures;
}
