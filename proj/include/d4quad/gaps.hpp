#pragma once

#include "d4quad/pell.hpp"

namespace d4quad::gaps {

using pell::D4Pair;

enum class Parity { even, odd };

/// Certified lower bound for l when P_l = Q_m has a Type-a solution:
/// ceil((-2 + sqrt(4 + 3*sqrt(a))) / 12), at least 1. `a` is the smallest
/// element of the triple under consideration.
Int lower_type_a(const Int& a, long prec = exact::kDefaultPrecision);

/// Strict lower bound for m when P_l = Q_m has a Type-b solution on a
/// c2+- triple: floor(coeff_k * a) + 1 with coeff_k in
/// {(3*sqrt2-4)/4, (2*sqrt3-3)/2, (5*sqrt6-12)/4}.
Int lower_type_b(const Int& a, int k, long prec = exact::kDefaultPrecision);

/// Lower bound for the half-index m in v_{2m} = w_{2n} (even) or
/// v_{2m+1} = w_{2n+1} (odd) on a c3+- triple, from the sorted roles b, c.
Int lower_vw(const Int& b, const Int& c, Parity parity,
             long prec = exact::kDefaultPrecision);

/// Witness that the branch s = +-a (mod r) is empty for family c2+-: r > 28
/// cannot divide 4k+4 in {12, 16, 28}.
struct ExclusionCertificate {
  Int r;
  int k;
  bool ok;
};

/// Issues the certificate; throws InapplicableSmallR when r <= 28 (cannot
/// occur for the pipeline's pairs, which all have b > 10^5).
ExclusionCertificate exclusion_c2_s_congruence(const D4Pair& pair);

}  // namespace d4quad::gaps
