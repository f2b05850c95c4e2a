#include "d4quad/pell.hpp"

namespace d4quad::pell {

std::pair<Int, Int> fundamental_pair(int k) {
  switch (k) {
    case 2:
      return {Int(6), Int(4)};
    case 3:
      return {Int(4), Int(2)};
    case 6:
      return {Int(10), Int(4)};
    default:
      throw UnsupportedK("fundamental_pair: k must be one of {2, 3, 6}, got " +
                         std::to_string(k));
  }
}

D4Pair pair_at(int k, unsigned p) {
  if (p < 1) throw Error("pair_at: p must be >= 1");
  auto [r1, a1] = fundamental_pair(k);
  // (r_0, a_0) = (2, 0); x_{p+1} = r1 * x_p - x_{p-1}
  Int r_prev = 2, a_prev = 0;
  Int r = r1, a = a1;
  for (unsigned i = 1; i < p; ++i) {
    Int rn = r1 * r - r_prev;
    Int an = r1 * a - a_prev;
    r_prev = r;
    a_prev = a;
    r = rn;
    a = an;
  }
  return D4Pair{a, k, r, p};
}

std::vector<FundamentalSolution> fundamental_general(const Int& a, const Int& b) {
  if (!(a < b)) throw Error("fundamental_general: requires a < b");
  Int r;
  if (!is_perfect_square(a * b + 4, &r)) {
    throw NotAD4Pair("fundamental_general: ab+4 is not a perfect square");
  }
  // 1 <= x0 <= sqrt(a(b-a)/(r-2)), 1 <= |y0| <= sqrt((r-2)(b-a)/a)
  Int x_max = isqrt(a * (b - a) / (r - 2));
  Int y_abs_max_sq = (r - 2) * (b - a) / a;
  std::vector<FundamentalSolution> out;
  for (Int x0 = 1; x0 <= x_max; ++x0) {
    Int y_sq_num = b * x0 * x0 + 4 * (a - b);
    if (y_sq_num <= 0 || y_sq_num % a != 0) continue;
    Int y0;
    if (!is_perfect_square(y_sq_num / a, &y0)) continue;
    if (y0 < 1 || y0 * y0 > y_abs_max_sq) continue;
    out.push_back({y0, x0});
    out.push_back({-y0, x0});
  }
  return out;
}

}  // namespace d4quad::pell
