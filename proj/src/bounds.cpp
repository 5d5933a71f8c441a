#include "recross/bounds.hpp"

#include <stdexcept>

namespace recross {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return -floor_div(-a, b);
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt jensen_upper(int n) {
  if (n < 3) throw std::invalid_argument("jensen_upper: n must be at least 3");
  const BigInt bn = n;
  const BigInt num = 7 * bn * bn * bn * bn - 56 * bn * bn * bn +
                     128 * bn * bn + 48 * bn * floor_div(bn - 7, 3) + 108;
  return floor_div(num, 432);
}

BigInt subgraph_lower_bound(int n, int a, const BigInt& cr_a) {
  if (a < 5)
    throw std::invalid_argument("subgraph_lower_bound: need a >= 5");
  if (a > n)
    throw std::invalid_argument("subgraph_lower_bound: need a <= n");
  if (cr_a < 0)
    throw std::invalid_argument("subgraph_lower_bound: negative base count");
  return ceil_div(cr_a * binomial(n, a), binomial(n - 4, a - 4));
}

const BoundsRow& BoundsTable::row(int n) const {
  for (const BoundsRow& r : rows)
    if (r.n == n) return r;
  throw std::out_of_range("BoundsTable: no row for n=" + std::to_string(n));
}

BoundsTable recursive_lower_bound(int n_max, int base_n, const BigInt& base_cr) {
  if (n_max < base_n)
    throw std::invalid_argument("recursive_lower_bound: n_max below base");
  BoundsTable t;
  BigInt b = base_cr;
  for (int n = base_n; n <= n_max; ++n) {
    if (n > base_n) b = ceil_div(b * n, n - 4);
    t.rows.push_back(BoundsRow{n, b, jensen_upper(n), BigRat(b, binomial(n, 4))});
  }
  return t;
}

BigRat ratio_lower_bound(int n, const BigInt& cr_lower) {
  if (n < 4) throw std::invalid_argument("ratio_lower_bound: n must be at least 4");
  return BigRat(cr_lower, binomial(n, 4));
}

std::pair<BigRat, BigRat> nu_star_bracket() {
  const BoundsTable t = recursive_lower_bound(400);
  return {t.row(400).ratio, BigRat(6467, 16848)};
}

std::vector<int> k11_candidates() {
  const BigInt lo = recursive_lower_bound(11).row(11).lower;
  const BigInt hi = jensen_upper(11);
  std::vector<int> out;
  for (BigInt v = lo; v <= hi; ++v)
    if (v % 2 == 0) out.push_back(static_cast<int>(v));
  return out;
}

std::string format_decimal(const BigRat& r, int digits) {
  if (r < 0) return "-" + format_decimal(-r, digits);
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string out = BigInt(num / den).str();
  if (digits <= 0) return out;
  out += '.';
  num %= den;
  for (int i = 0; i < digits; ++i) {
    num *= 10;
    out += BigInt(num / den).str();
    num %= den;
  }
  return out;
}

std::string to_text(const BoundsTable& t) {
  std::string out = "n\tlower\tupper\tratio\tratio_fraction\n";
  for (const BoundsRow& r : t.rows) {
    out += std::to_string(r.n);
    out += '\t';
    out += r.lower.str();
    out += '\t';
    out += r.jensen.str();
    out += '\t';
    out += format_decimal(r.ratio, 10);
    out += '\t';
    out += r.lower.str() + "/" + binomial(r.n, 4).str();
    out += '\n';
  }
  return out;
}

long long known_lower_bound(int n) {
  static const long long small[] = {0, 0, 0, 0, 0, 1, 3, 9, 19, 36};
  if (n <= 9) return small[n < 0 ? 0 : n];
  const BigInt b = recursive_lower_bound(n).row(n).lower;
  return static_cast<long long>(b);
}

}  // namespace recross
