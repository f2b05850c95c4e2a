#include "d4quad/gaps.hpp"

namespace d4quad::gaps {

using exact::Real;

Int lower_type_a(const Int& a, long prec) {
  if (a < 1) throw Error("lower_type_a: requires a >= 1");
  Real ra = Real::from_int(a, prec);
  Real v = (Real::from_long(-2, prec) +
            (Real::from_long(4, prec) + 3 * ra.sqrt()).sqrt()) /
           Real::from_long(12, prec);
  // ceil of the lower endpoint is a sound lower bound; doubling precision
  // can only raise it
  Int bound = v.ceil_lower();
  return bound < 1 ? Int(1) : bound;
}

Int lower_type_b(const Int& a, int k, long prec) {
  Real ra = Real::from_int(a, prec);
  Real coeff(prec);
  switch (k) {
    case 2:
      coeff = (3 * Real::from_long(2, prec).sqrt() - Real::from_long(4, prec)) /
              Real::from_long(4, prec);
      break;
    case 3:
      coeff = (2 * Real::from_long(3, prec).sqrt() - Real::from_long(3, prec)) /
              Real::from_long(2, prec);
      break;
    case 6:
      coeff = (5 * Real::from_long(6, prec).sqrt() - Real::from_long(12, prec)) /
              Real::from_long(4, prec);
      break;
    default:
      throw UnsupportedK("lower_type_b: k must be one of {2, 3, 6}");
  }
  Int bound = (coeff * ra).floor_lower() + 1;
  return bound < 1 ? Int(1) : bound;
}

Int lower_vw(const Int& b, const Int& c, Parity parity, long prec) {
  if (b < 1 || c < b) throw Error("lower_vw: requires 1 <= b <= c");
  Real rb = Real::from_int(b, prec);
  Real rc = Real::from_int(c, prec);
  if (parity == Parity::even) {
    // m > 0.495 * sqrt(c/b)
    Real v = Real::from_ratio(99, 200, prec) * (rc / rb).sqrt();
    Int bound = v.floor_lower() + 1;
    return bound < 1 ? Int(1) : bound;
  }
  // least m with m^2 > 0.0625 * sqrt(c) / b, computed against the lower
  // endpoint so the bound stays sound
  Real x = Real::from_ratio(1, 16, prec) * rc.sqrt() / rb;
  Int t = x.floor_lower();
  if (t < 0) t = 0;
  Int m = isqrt(t) + 1;
  return m < 1 ? Int(1) : m;
}

ExclusionCertificate exclusion_c2_s_congruence(const D4Pair& pair) {
  if (pair.r <= 28) {
    throw InapplicableSmallR("exclusion_c2_s_congruence: r = " +
                             pair.r.get_str() + " <= 28, lemma inapplicable");
  }
  return ExclusionCertificate{pair.r, pair.k, true};
}

}  // namespace d4quad::gaps
