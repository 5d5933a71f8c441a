#include <doctest.h>

#include "recross/bounds.hpp"

using namespace recross;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("binomials") {
  CHECK(binomial(10, 4) == 210);
  CHECK(binomial(400, 4) == BigInt("1050739900"));
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(4, 4) == 1);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("closed-form upper bound") {
  CHECK(jensen_upper(10) == 63);
  // n = 10 by hand: the numerator is 27388 before the division by 432
  CHECK(jensen_upper(10) == BigInt(27388) / 432);
  CHECK(jensen_upper(11) == 102);
  CHECK(jensen_upper(12) == 156);
  // the drawing family is optimal for small n
  const int known[] = {0, 0, 1, 3, 9, 19, 36};
  for (int n = 3; n <= 9; ++n) CHECK(jensen_upper(n) == known[n - 3]);
  CHECK_THROWS_AS(jensen_upper(2), std::invalid_argument);
}

TEST_CASE("subgraph bound") {
  CHECK(subgraph_lower_bound(11, 10, 62) == 98);
  CHECK(subgraph_lower_bound(12, 11, 98) == 147);
  CHECK(subgraph_lower_bound(15, 15, 77) == 77);  // identity case
  CHECK_THROWS_AS(subgraph_lower_bound(10, 4, 1), std::invalid_argument);
}

TEST_CASE("recursive table headline values") {
  const BoundsTable t = recursive_lower_bound(400);
  CHECK(t.row(10).lower == 62);
  CHECK(t.row(11).lower == 98);
  CHECK(t.row(400).lower == BigInt("315356975"));
  CHECK(t.row(400).ratio == BigRat(BigInt("315356975"), BigInt("1050739900")));
  CHECK(format_decimal(t.row(400).ratio, 4) == "0.3001");
}

TEST_CASE("recursion step ceilings are tight") {
  const BoundsTable t = recursive_lower_bound(120);
  for (size_t i = 1; i < t.rows.size(); ++i) {
    const BigInt& prev = t.rows[i - 1].lower;
    const BigInt& cur = t.rows[i].lower;
    const int n = t.rows[i].n;
    CHECK((cur - 1) * (n - 4) < prev * n);
    CHECK(prev * n <= cur * (n - 4));
  }
}

TEST_CASE("ratios are monotone and below the upper bound") {
  const BoundsTable t = recursive_lower_bound(400);
  for (size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].ratio >= t.rows[i - 1].ratio);
    CHECK(t.rows[i].lower <= t.rows[i].jensen);
  }
}

TEST_CASE("ratio lower bound values") {
  CHECK(format_decimal(ratio_lower_bound(10, 62), 4) == "0.2952");
  CHECK(ratio_lower_bound(10, 61) == BigRat(61, 210));
  CHECK(format_decimal(ratio_lower_bound(10, 61), 6) == "0.290476");
  CHECK(ratio_lower_bound(4, 0) == 0);
}

TEST_CASE("bracket for the limit ratio") {
  const auto [lo, hi] = nu_star_bracket();
  CHECK(lo == BigRat(BigInt("315356975"), BigInt("1050739900")));
  CHECK(hi == BigRat(6467, 16848));
  CHECK(format_decimal(lo, 4) == "0.3001");
  CHECK(format_decimal(hi, 4) == "0.3838");
  CHECK(lo < hi);
}

TEST_CASE("K11 candidates") {
  CHECK(k11_candidates() == std::vector<int>{98, 100, 102});
}

TEST_CASE("hypothetical seeds reproduce the quoted ratios") {
  CHECK(format_decimal(recursive_lower_bound(400, 11, 100).row(400).ratio, 5) ==
        "0.30544");
  CHECK(format_decimal(recursive_lower_bound(400, 11, 102).row(400).ratio, 5) ==
        "0.31085");
  CHECK(format_decimal(recursive_lower_bound(400, 12, 156).row(400).ratio, 5) ==
        "0.31839");
}

TEST_CASE("table export format") {
  const BoundsTable t = recursive_lower_bound(12);
  const std::string text = to_text(t);
  CHECK(text.find("11\t98\t102\t") != std::string::npos);
  CHECK(text.find("98/330") != std::string::npos);  // C(11,4) = 330
  CHECK(text.find("12\t147\t156\t") != std::string::npos);
}

TEST_CASE("known lower bounds for search consistency") {
  CHECK(known_lower_bound(4) == 0);
  CHECK(known_lower_bound(6) == 3);
  CHECK(known_lower_bound(9) == 36);
  CHECK(known_lower_bound(10) == 62);
  CHECK(known_lower_bound(11) == 98);
}

TEST_SUITE_END();
