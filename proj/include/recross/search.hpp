#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recross/geometry.hpp"

namespace recross {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchParams {
  int n = 10;
  int restarts = 64;
  int moves_per_restart = 20000;
  std::int64_t box_size = 10000;
  std::uint64_t master_seed = 42;
  // 0 selects mixed move scales from 1 up to box_size; a positive value
  // pins every move offset to [-perturb_radius, perturb_radius].
  std::int64_t perturb_radius = 0;
  bool allow_plateau = false;
  int threads = 0;  // 0: RECROSS_THREADS env var, else hardware count
};

struct SearchResult {
  Drawing best;
  int count = 0;
  std::vector<int> history;  // best count per restart, in restart order
  std::string seed_trace;    // how to reproduce this result
};

// Seeded multi-restart descent: random general-position starts, then
// single-vertex integer moves accepted on strict improvement.  Moves that
// break general position are discarded and the stream continues, so runs
// are reproducible.  Restarts are independent; results merge by (count,
// lexicographic points) and the outcome does not depend on thread count.//
// Results are checked against the known lower bound for n; an undercut
// means a counting bug or a falsified bound and stops the run.
SearchResult local_search(const SearchParams& params);

// Budgeted tuned defaults per n, used by the CLI when flags are omitted.
SearchParams default_search_params(int n);

// Descent from an existing drawing; never returns a worse drawing.
// A zero budget returns the input unchanged.
Drawing improve_drawing(const Drawing& d, int move_budget, std::uint64_t seed);

// Exact minimum over all general-position n-subsets of the grid
// {0..grid_w-1} x {0..grid_h-1}, with a witness.  Refuses instances with
// more than 1e8 subsets.
SearchResult grid_exhaustive(int n, int grid_w, int grid_h);

int resolve_threads(int requested);

}  // namespace recross
