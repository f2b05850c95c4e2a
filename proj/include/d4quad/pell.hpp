#pragma once

#include <utility>
#include <vector>

#include "d4quad/exactmath.hpp"

namespace d4quad::pell {

/// A D(4)-pair {a, ka} with k*a^2 + 4 = r^2; p is the index of (r, a) in the
/// solution sequence of the pair equation.
struct D4Pair {
  Int a;
  int k = 0;
  Int r;
  unsigned p = 0;

  Int b() const { return k * a; }
};

/// A fundamental solution (y0, x0) of a*Y^2 - b*X^2 = 4(a - b).
struct FundamentalSolution {
  Int y0;
  Int x0;
};

/// The unique fundamental solution (r1, a1) of r^2 - k*a^2 = 4,
/// k in {2, 3, 6}.
std::pair<Int, Int> fundamental_pair(int k);

/// The p-th solution of the pair equation, p >= 1, via the integer
/// recurrence x_{p+2} = r1*x_{p+1} - x_p.
D4Pair pair_at(int k, unsigned p);

/// Exhaustively enumerates fundamental solutions of a*Y^2 - b*X^2 = 4(a-b)
/// within the x0/y0 bounds. For b <= 6.85a the result is {(2,2), (-2,2)}.
std::vector<FundamentalSolution> fundamental_general(const Int& a, const Int& b);

}  // namespace d4quad::pell
