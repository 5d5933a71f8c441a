#include <CLI11.hpp>
#include <iostream>

#include "recross/bounds.hpp"
#include "recross/io.hpp"
#include "recross/kites.hpp"
#include "recross/rules.hpp"
#include "recross/search.hpp"
#include "recross/svg.hpp"

namespace {

using namespace recross;

int cmd_count(const std::string& file) {
  const Drawing d = read_drawing_file(file);
  std::cout << "crossings: " << count_crossings(d).count() << "\n";
  return 0;
}

int cmd_classify(const std::string& file) {
  const Drawing d = read_drawing_file(file);
  const HullDecomposition hd = peel_hulls(d);
  std::cout << "n: " << d.size() << "\n";
  std::cout << "peel:";
  for (int s : hd.profile()) std::cout << " " << s;
  std::cout << "\n";
  std::cout << "nested-triangles: "
            << (is_nested_triangle_drawing(d) ? "yes" : "no") << "\n";
  std::cout << "crossings: " << count_crossings(d).count() << "\n";
  if (hd.profile() == std::vector<int>{3, 3}) {
    const ColoredDrawing cd = color_by_hulls(d);
    const KiteConfiguration cfg = classify_configuration(cd);
    std::cout << "configuration: " << to_string(cfg.cls) << "\n";
    std::cout << "non-concentric-crossings: "
              << count_non_concentric_crossings(cd) << "\n";
    for (const Kite& k : cfg.kites)
      std::cout << "kite: origin=" << k.origin << " l=" << k.left
                << " m=" << k.middle << " r=" << k.right << " shape="
                << (k.shape == KiteShape::Concave ? "concave" : "convex")
                << " lor-angle=" << (k.lor_acute ? "acute" : "non-acute")
                << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int instances, std::uint64_t seed,
               const std::string& file, int threads) {
  const std::vector<RuleId> rules = suite_rules(suite);
  if (!file.empty()) {
    const Drawing d = read_drawing_file(file);
    int failures = 0;
    for (RuleId r : rules) {
      const CheckReport rep = check_drawing(d, r, seed);
      std::cout << to_line(rep) << "\n";
      if (rep.failed()) ++failures;
    }
    std::cout << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 1;
  }
  SuiteOptions opts;
  opts.rules = rules;
  opts.instances = instances;
  opts.master_seed = seed;
  opts.threads = threads;
  const SuiteResult result = run_suite(opts);
  std::cout << result.text();
  return result.failures == 0 ? 0 : 1;
}

int cmd_search(int n, int restarts, int moves, std::int64_t box,
               std::uint64_t seed, std::int64_t perturb, bool plateau,
               int threads, const std::string& out_file) {
  SearchParams p = default_search_params(n);
  if (restarts > 0) p.restarts = restarts;
  if (moves > 0) p.moves_per_restart = moves;
  if (box > 0) p.box_size = box;
  p.master_seed = seed;
  p.perturb_radius = perturb;
  p.allow_plateau = plateau;
  p.threads = threads;
  const SearchResult r = local_search(p);
  std::cout << "best: " << r.count << "\n";
  std::cout << "seed-trace: " << r.seed_trace << "\n";
  if (!out_file.empty()) {
    write_file(out_file, write_drawing(r.best));
    std::cout << "witness: " << out_file << "\n";
  } else {
    std::cout << write_drawing(r.best);
  }
  return 0;
}

int cmd_grid_min(int n, const std::string& grid) {
  const size_t x = grid.find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("--grid expects WxH, e.g. 4x4");
  const int w = std::stoi(grid.substr(0, x));
  const int h = std::stoi(grid.substr(x + 1));
  const SearchResult r = grid_exhaustive(n, w, h);
  std::cout << "minimum: " << r.count << "\n";
  std::cout << write_drawing(r.best);
  return 0;
}

int cmd_bounds(int max_n, int base_n, long long base_cr) {
  const BoundsTable t = recursive_lower_bound(max_n, base_n, BigInt(base_cr));
  std::cout << to_text(t);
  const auto [lo, hi] = nu_star_bracket();
  std::cout << "nu-star-bracket: [" << format_decimal(lo, 10) << ", "
            << format_decimal(hi, 10) << "]\n";
  return 0;
}

int cmd_render(const std::string& file, const std::string& out_file) {
  const Drawing d = read_drawing_file(file);
  write_file(out_file, render_colored_svg(d));
  std::cout << "rendered: " << out_file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for rectilinear drawings of complete graphs"};
  app.require_subcommand(1);

  std::string file, out_file, suite = "all", grid = "4x4";
  int instances = 1000, n = 10, restarts = 0, moves = 0, max_n = 400,
      base_n = 10, threads = 0;
  long long base_cr = 62;
  std::int64_t box = 0, perturb = 0;
  std::uint64_t seed = 42;
  bool plateau = false;

  auto* count = app.add_subcommand("count", "count the crossings of a drawing");
  count->add_option("file", file)->required();

  auto* classify =
      app.add_subcommand("classify", "peel profile and configuration class");
  classify->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "run the lemma rule suites");
  verify->add_option("--suite", suite, "k6, k9, k10, appendix or all");
  verify->add_option("--instances", instances, "instances per rule");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--threads", threads, "worker threads (0 = auto)");
  verify->add_option("file", file, "check one drawing instead of generating");

  auto* search = app.add_subcommand("search", "look for low-crossing drawings");
  search->add_option("--n", n)->required();
  search->add_option("--restarts", restarts, "0 = tuned default");
  search->add_option("--moves", moves, "moves per restart, 0 = tuned default");
  search->add_option("--box", box, "coordinate box, 0 = tuned default");
  search->add_option("--seed", seed);
  search->add_option("--perturb", perturb, "fixed move radius, 0 = mixed");
  search->add_flag("--plateau", plateau, "also accept equal-count moves");
  search->add_option("--threads", threads);
  search->add_option("-o,--out", out_file, "write the witness drawing here");

  auto* grid_min = app.add_subcommand("grid-min", "exact minimum on a small grid");
  grid_min->add_option("--n", n)->required();
  grid_min->add_option("--grid", grid, "grid size WxH");

  auto* bounds = app.add_subcommand("bounds", "crossing-number bound table");
  bounds->add_option("--max-n", max_n);
  bounds->add_option("--base-n", base_n);
  bounds->add_option("--base-cr", base_cr);

  auto* render = app.add_subcommand("render", "SVG picture of a drawing");
  render->add_option("file", file)->required();
  render->add_option("-o,--out", out_file)->required();

  try {
    app.parse(argc, argv);
    if (count->parsed()) return cmd_count(file);
    if (classify->parsed()) return cmd_classify(file);
    if (verify->parsed())
      return cmd_verify(suite, instances, seed, file, threads);
    if (search->parsed())
      return cmd_search(n, restarts, moves, box, seed, perturb, plateau,
                        threads, out_file);
    if (grid_min->parsed()) return cmd_grid_min(n, grid);
    if (bounds->parsed()) return cmd_bounds(max_n, base_n, base_cr);
    if (render->parsed()) return cmd_render(file, out_file);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
