#pragma once

#include <vector>

#include "d4quad/sequences.hpp"

namespace d4quad::oracle {

using tuples::SolutionType;
using tuples::Triple;

/// Exhaustive-search caps; every report states them explicitly.
struct SearchWindow {
  Int a_max;
  Int c_max;
  Int d_max;
  unsigned long l_max = 0;
};

/// All positive d <= d_max, d not in {a,b,c}, with ad+4, bd+4, cd+4 all
/// squares, by enumerating x with ad+4 = x^2 over the residues x^2 = 4 (mod a).
std::vector<Int> extend_triple(const Int& a, const Int& b, const Int& c,
                               const Int& d_max);

struct PQSolution {
  unsigned long l;
  unsigned long m;
  Int x;
};

/// All coincidences P_l = Q_m with m <= l <= l_max, by generating both
/// sequences and merging (both are strictly increasing). l_max <= 10^4.
std::vector<PQSolution> solve_PQ_small(const Triple& t, SolutionType type,
                                       int z0_sign, int y2_sign,
                                       unsigned long l_max);

struct VWSolution {
  unsigned long m;
  unsigned long n;
  Int z;
};

/// All coincidences v_m = w_n with n <= m <= m_max for the c3 route; parity
/// selects the even-index (z0 = z1 = sign*2) or odd-index (z0 = sign*t,
/// z1 = sign*s) initial terms.
std::vector<VWSolution> solve_vw_small(const Triple& t, bool odd, int sign,
                                       unsigned long m_max);

struct SweepRow {
  Int a, b, c, d;
  std::string d_class;  // "d-" or "d+" (or "irregular")
};

struct SweepReport {
  SearchWindow window;
  int k = 0;
  unsigned long triples = 0;
  std::vector<SweepRow> rows;
  unsigned long irregular = 0;
};

/// Ground truth for the theorem at desk scale: every quadruple containing a
/// pair {a, ka} inside the window must be regular, with d = d- or d+ exactly.
SweepReport quadruples_containing_pair(int k, const Int& a_max,
                                       const Int& c_max, const Int& d_max);

/// Solutions of r^2 - 5a^2 = 4 with r <= L_{2*n_max} are exactly the
/// Lucas/Fibonacci pairs (L_{2n}, F_{2n}).
bool fibonacci_check(unsigned n_max);

/// r^2 - 4a^2 = 4 has no solution with a >= 1 and r <= r_max.
bool k4_check(const Int& r_max);

}  // namespace d4quad::oracle
