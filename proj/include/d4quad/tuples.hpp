#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "d4quad/pell.hpp"

namespace d4quad::tuples {

using pell::D4Pair;

enum class Family { c1p, c1m, c2p, c2m, c3p, c3m };

int family_nu(Family f);      // 1, 2 or 3
int family_sign(Family f);    // +1 or -1
Family family_of(int nu, int sign);
std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// The two admissible initial-term configurations for intersecting the
/// P/Q recurrences: z0 = +-2 (a) versus z0 = +-t (b).
enum class SolutionType { a, b };

/// A D(4)-triple stored sorted ascending; all downstream formulas address
/// elements by role (smallest/middle/largest), never by original name.
struct Triple {
  Int a, b, c;  // a < b < c
  Int r, s, t;  // r^2 = ab+4, s^2 = ac+4, t^2 = bc+4
  // where the original (pair.a, pair.b, family c) ended up: indices into
  // the sorted order, e.g. {1, 2, 0} when the family c is the smallest
  std::array<int, 3> role_order{0, 1, 2};
};

/// Builds the sorted triple from three distinct positive elements.
Triple make_triple(const Int& x, const Int& y, const Int& z);

struct TripleCandidate {
  D4Pair pair;
  Family family;
  Int c;  // the family element, possibly smaller than pair.a
  Int s;  // sqrt(pair.a * c + 4)
  Int t;  // sqrt(pair.b * c + 4)
  Triple sorted;
};

/// d-(a,b,c) and d+(a,b,c); the inner square root is exact and equals r*s*t.
/// Elements may be given in any order; a zero smallest element is tolerated
/// (it shows up when checking degenerate-family identities).
std::pair<Int, Int> d_pm(const Int& a, const Int& b, const Int& c);

/// The family element c_nu^sign for a pair, with s and t recovered by exact
/// square roots and the closed form cross-checked against the (s_nu, t_nu)
/// recurrences. Throws DegenerateC when c <= 0.
TripleCandidate c_family(const D4Pair& pair, Family family);

/// True iff all pairwise products of distinct elements + n are perfect
/// squares (n defaults to 4).
bool check_tuple(const std::vector<Int>& elements, const Int& n = 4);

/// True iff some element equals d- or d+ of the other three.
bool is_regular(const std::vector<Int>& quadruple);

}  // namespace d4quad::tuples
