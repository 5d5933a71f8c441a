#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace recross {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// Crossing count of the explicit drawing family behind the closed-form
// upper bound:
//   j(n) = floor((7n^4 - 56n^3 + 128n^2 + 48n*floor((n-7)/3) + 108) / 432)
// with floors toward minus infinity.
BigInt jensen_upper(int n);

// ceil(cr_a * C(n,a) / C(n-4,a-4)): every a-subset of a K_n drawing carries
// at least cr_a crossings, and each crossing is shared by C(n-4,a-4)
// subsets.
BigInt subgraph_lower_bound(int n, int a, const BigInt& cr_a);

struct BoundsRow {
  int n;
  BigInt lower;
  BigInt jensen;
  BigRat ratio;  // lower / C(n,4)
};

struct BoundsTable {
  std::vector<BoundsRow> rows;

  const BoundsRow& row(int n) const;
};

// The a = n-1 recursion b(n) = ceil(b(n-1) * n / (n-4)) from a known base
// value, tabulated with the closed-form upper bound and the exact ratio.
BoundsTable recursive_lower_bound(int n_max, int base_n = 10,
                                  const BigInt& base_cr = 62);

BigRat ratio_lower_bound(int n, const BigInt& cr_lower);

// Best known bracket for the limit of cr(K_n)/C(n,4).
std::pair<BigRat, BigRat> nu_star_bracket();

// Possible values of the K11 rectilinear crossing number: the recursive
// lower bound through the closed-form upper bound, even values only.
std::vector<int> k11_candidates();

// Decimal expansion of a non-negative rational, truncated to the given
// number of fractional digits.
std::string format_decimal(const BigRat& r, int digits);

// n, lower, upper, ratio as decimal (10 places) and as an exact fraction,
// tab-separated, one row per line.
std::string to_text(const BoundsTable& t);

// Floor for search-consistency checks: the known exact optima for n <= 9,
// the recursion seeded at (10, 62) above.
long long known_lower_bound(int n);

}  // namespace recross
