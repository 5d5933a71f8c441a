#include <doctest.h>

#include "recross/search.hpp"

using namespace recross;

TEST_SUITE_BEGIN("search");

TEST_CASE("grid oracle on tiny instances") {
  CHECK(grid_exhaustive(4, 3, 3).count == 0);
  CHECK(grid_exhaustive(4, 4, 4).count == 0);
  const SearchResult five = grid_exhaustive(5, 4, 4);
  CHECK(five.count == 1);
  CHECK(count_crossings(five.best).count() == 1);
}

TEST_CASE("grid oracle guards its budget") {
  CHECK_THROWS_AS(grid_exhaustive(12, 30, 30), BudgetExceeded);
}

TEST_CASE("small-n searches reach the known optima quickly") {
  SearchParams p;
  p.master_seed = 42;
  p.restarts = 4;
  p.moves_per_restart = 1500;
  p.box_size = 1000;
  p.n = 4;
  CHECK(local_search(p).count == 0);
  p.n = 5;
  CHECK(local_search(p).count == 1);
  p.n = 6;
  const SearchResult r6 = local_search(p);
  CHECK(r6.count == 3);
  CHECK(count_crossings(r6.best).count() == 3);
}

TEST_CASE("search results are reproducible and thread-independent") {
  SearchParams p;
  p.n = 7;
  p.restarts = 6;
  p.moves_per_restart = 1200;
  p.master_seed = 7;
  p.threads = 1;
  const SearchResult a = local_search(p);
  p.threads = 4;
  const SearchResult b = local_search(p);
  CHECK(a.count == b.count);
  CHECK(a.best == b.best);
  CHECK(a.history == b.history);
}

TEST_CASE("history never beats the final result") {
  SearchParams p;
  p.n = 7;
  p.restarts = 5;
  p.moves_per_restart = 800;
  p.master_seed = 3;
  const SearchResult r = local_search(p);
  for (int h : r.history) CHECK(h >= r.count);
  CHECK(count_crossings(r.best).count() == r.count);
}

TEST_CASE("improve_drawing never degrades") {
  // convex-position K7 has 35 crossings; any interior move beats it
  const Drawing convex7({{995, 100}, {542, 840}, {-319, 948}, {-940, 342},
                         {-853, -522}, {-124, -992}, {698, -716}});
  CHECK(improve_drawing(convex7, 0, 1) == convex7);
  const Drawing better = improve_drawing(convex7, 2000, 1);
  CHECK(count_crossings(better).count() < 35);

  // an optimal K6 witness cannot improve
  const Drawing opt6({{0, 100}, {-87, -50}, {87, -50}, {0, 10}, {-9, -5},
                      {9, -5}});
  CHECK(count_crossings(improve_drawing(opt6, 500, 2)).count() == 3);
}

TEST_CASE("oracle consistency on the 4x4 box") {
  // search restricted to the oracle's box can never beat it
  const SearchResult oracle = grid_exhaustive(5, 4, 4);
  SearchParams p;
  p.n = 5;
  p.box_size = 3;
  p.restarts = 6;
  p.moves_per_restart = 500;
  p.master_seed = 11;
  const SearchResult searched = local_search(p);
  CHECK(searched.count >= oracle.count);
}

TEST_SUITE_END();
