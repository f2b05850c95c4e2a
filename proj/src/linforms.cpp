#include "d4quad/linforms.hpp"

#include <cmath>

namespace d4quad::linforms {

using exact::surd_combo;

LinearFormInstance make_instance(const Triple& t, SolutionType type,
                                 int z0_sign, int y2_sign) {
  LinearFormInstance inst;
  inst.triple = t;
  inst.type = type;
  inst.z0_sign = z0_sign;
  inst.y2_sign = (type == SolutionType::a) ? 1 : y2_sign;
  auto [z0, x0] = seq::initial_terms_Q(t, type, z0_sign);
  inst.z0 = z0;
  inst.x0 = x0;
  inst.y2 = inst.y2_sign * 2;
  inst.x2 = 2;
  return inst;
}

Real eval_alpha(const Triple& t, long prec) {
  return (Real::from_int(t.r, prec) + Real::from_int(t.a * t.b, prec).sqrt()) /
         Real::from_long(2, prec);
}

Real eval_beta(const Triple& t, long prec) {
  return (Real::from_int(t.s, prec) + Real::from_int(t.a * t.c, prec).sqrt()) /
         Real::from_long(2, prec);
}

Real eval_gamma(const LinearFormInstance& inst, long prec) {
  const Triple& t = inst.triple;
  Real num = surd_combo(inst.y2, t.a, inst.x2, t.b, prec);
  Real den = surd_combo(inst.z0, t.a, inst.x0, t.c, prec);
  return Real::from_int(t.c, prec).sqrt() * num /
         (Real::from_int(t.b, prec).sqrt() * den);
}

Real eval_lambda(const LinearFormInstance& inst, long l, long m, long prec) {
  const Triple& t = inst.triple;
  return Real::from_long(l, prec) * eval_alpha(t, prec).log() -
         Real::from_long(m, prec) * eval_beta(t, prec).log() +
         eval_gamma(inst, prec).log();
}

Real lambda_bound(const LinearFormInstance& inst, long m, long prec) {
  if (m < 1) throw Error("lambda_bound: requires m >= 1");
  const Triple& t = inst.triple;
  Real decay = eval_beta(t, prec).pow_int(-2 * m);
  if (inst.type == SolutionType::a) {
    return Real::from_ratio(117, 10, prec) * decay;
  }
  return Real::from_ratio(22, 5, prec) * Real::from_int(t.a * t.a, prec) * decay;
}

Real matveev_C(int j, int chi, long prec) {
  if (j < 1 || (chi != 1 && chi != 2)) {
    throw Error("matveev_C: requires j >= 1 and chi in {1, 2}");
  }
  Real ej = exact::Real::e(prec) * Real::from_long(j, prec) /
            Real::from_long(2, prec);
  Real first = ej.pow_int(chi) / Real::from_long(chi, prec) *
               Real::from_long(30, prec).pow_int(j + 3) *
               Real::from_long(j, prec).pow_int(3) *
               Real::from_long(j, prec).sqrt();
  Int two_pow = Int(1) << (6 * j + 20);
  Real second = Real::from_int(two_pow, prec);
  if (first.certainly_less(second)) return first;
  if (second.certainly_less(first)) return second;
  // overlapping: hull of the pointwise minimum
  Real r(prec);
  mpfr_min(r.lo_mut(), first.lo(), second.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), first.hi(), second.hi(), MPFR_RNDU);
  return r;
}

Real height_gamma(const LinearFormInstance& inst, int k, long prec) {
  const Triple& t = inst.triple;
  if (t.c == t.a) throw Error("height_gamma: degenerate c = a");
  Int a0 = 16 * Int(k) * Int(k) * (t.c - t.a) * (t.c - t.a);
  Real sum = Real::from_int(a0, prec).log();
  Real sc = Real::from_int(t.c, prec).sqrt();
  Real sb = Real::from_int(t.b, prec).sqrt();
  Real one = Real::from_long(1, prec);
  for (int sn : {1, -1}) {
    for (int sd : {1, -1}) {
      Real num = surd_combo(inst.y2, t.a, sn * inst.x2, t.b, prec);
      Real den = surd_combo(inst.z0, t.a, sd * inst.x0, t.c, prec);
      Real conj = (sc * num / (sb * den)).abs();
      if (!one.certainly_less(conj)) continue;  // max(1, |conj|) = 1
      sum = sum + conj.log();
    }
  }
  return sum / Real::from_long(4, prec);
}

BranchType branch_from_name(const std::string& name) {
  if (name == "a") return BranchType::type_a;
  if (name == "b") return BranchType::type_b;
  if (name == "vw_even") return BranchType::vw_even;
  if (name == "vw_odd") return BranchType::vw_odd;
  throw Error("unknown branch type: " + name);
}

std::string branch_name(BranchType t) {
  switch (t) {
    case BranchType::type_a: return "a";
    case BranchType::type_b: return "b";
    case BranchType::vw_even: return "vw_even";
    case BranchType::vw_odd: return "vw_odd";
  }
  return "?";
}

namespace {

Real bound_lhs(const Int& n, BoundForm form, long prec) {
  Real rn = Real::from_int(n, prec);
  if (form == BoundForm::l_over_log_el) {
    return rn / (exact::Real::e(prec) * rn).log();
  }
  return rn / (rn + Real::from_long(1, prec)).log();
}

}  // namespace

Int solve_index_bound(double K, const Real& X, BoundForm form, long prec) {
  Real rhs = Real::from_double(K, prec) * X.log().pow_int(2);
  auto holds = [&](const Int& n) {
    Real lhs = bound_lhs(n, form, prec);
    return mpfr_cmp(lhs.lo(), rhs.hi()) < 0;  // possibly satisfied
  };
  if (!holds(Int(1))) return 1;
  Int lo = 1, hi = 2;
  int guard = 0;
  while (holds(hi)) {
    lo = hi;
    hi *= 2;
    if (++guard > 512) throw Error("solve_index_bound: no finite solution");
  }
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

RouteBound route_bound(int k, const pell::D4Pair& pair, int family, int sign,
                       BranchType type, long prec) {
  RouteBound out;
  tuples::TripleCandidate tc;
  try {
    tc = tuples::c_family(pair, tuples::family_of(family, sign));
  } catch (const DegenerateC&) {
    return out;
  }
  out.defined = true;
  const Triple& t = tc.sorted;
  if (type == BranchType::type_a || type == BranchType::type_b) {
    double K;
    Real X(prec);
    if (type == BranchType::type_a) {
      out.gap = gaps::lower_type_a(t.a, prec);
      if (family == 1 && sign < 0) {
        // permuted triple {c1-, a, b}: the c1- constants of the proposition
        K = (k == 6) ? 9e13 : 4.5e13;
        X = Real::from_long(k == 6 ? 27 : 72, prec) *
            Real::from_int(pair.a, prec);
      } else {
        K = 3.36e13;
        X = Real::from_ratio(107, 10, prec) * Real::from_int(tc.c * tc.c, prec);
      }
    } else {
      out.gap = gaps::lower_type_b(t.a, k, prec);
      K = 6.44e13;
      X = Real::from_ratio(107, 10, prec) * Real::from_int(tc.c * tc.c, prec);
    }
    out.cap = solve_index_bound(K, X, BoundForm::l_over_log_el, prec);
    out.admissible = out.gap <= out.cap;
    return out;
  }
  // VW routes: full sequence index is 2m (even) or 2m+1 (odd)
  bool even = (type == BranchType::vw_even);
  Int m_lower = gaps::lower_vw(t.b, t.c, even ? gaps::Parity::even : gaps::Parity::odd, prec);
  Int full_cap = solve_index_bound(6.543e15, Real::from_int(t.c, prec),
                                   BoundForm::m_over_log_m1, prec);
  Int full_gap = even ? Int(2 * m_lower) : Int(2 * m_lower + 1);
  out.admissible = full_gap <= full_cap;
  out.gap = m_lower;
  out.cap = even ? Int(full_cap / 2) : Int((full_cap - 1) / 2);
  return out;
}

PBound p_bound(int k, int family, BranchType type, long prec) {
  if (family < 1 || family > 3) throw UnsupportedFamily("p_bound: family must be 1..3");
  if (family == 1 && type != BranchType::type_a) {
    throw UnsupportedFamily("p_bound: c1 families admit Type-a solutions only");
  }
  if (family == 2 &&
      (type == BranchType::vw_even || type == BranchType::vw_odd)) {
    throw UnsupportedFamily("p_bound: the v/w route applies to c3 only");
  }
  if (family == 3 &&
      (type == BranchType::type_a || type == BranchType::type_b)) {
    throw UnsupportedFamily("p_bound: c3 is handled via the v/w route");
  }
  PBound result;
  result.index_cap = 0;
  bool any_success = false;
  for (int p = 1; p <= 2000; ++p) {
    pell::D4Pair pair = pell::pair_at(k, static_cast<unsigned>(p));
    bool ok_here = false;
    for (int sign : {1, -1}) {
      RouteBound e = route_bound(k, pair, family, sign, type, prec);
      if (e.admissible) {
        ok_here = true;
        result.p_max = p;
        if (e.cap > result.index_cap) result.index_cap = e.cap;
      }
    }
    if (ok_here) {
      any_success = true;
    } else if (any_success) {
      break;
    }
  }
  if (!any_success) throw Error("p_bound: no admissible p found");
  return result;
}

}  // namespace d4quad::linforms
