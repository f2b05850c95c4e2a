#include "d4quad/reduction.hpp"

namespace d4quad::reduction {

using exact::CFCursor;
using exact::surd_combo;

Route route_from_name(const std::string& name) {
  if (name == "pq_a") return Route::PQ_typeA;
  if (name == "pq_b") return Route::PQ_typeB;
  if (name == "vw_even") return Route::VW_even;
  if (name == "vw_odd") return Route::VW_odd;
  throw Error("unknown reduction route: " + name);
}

std::string route_name(Route r) {
  switch (r) {
    case Route::PQ_typeA: return "pq_a";
    case Route::PQ_typeB: return "pq_b";
    case Route::VW_even: return "vw_even";
    case Route::VW_odd: return "vw_odd";
  }
  return "?";
}

namespace {

void evaluate(ReductionInstance& inst, long prec) {
  const Triple& tr = inst.triple;
  inst.prec = prec;
  if (inst.route == Route::PQ_typeA || inst.route == Route::PQ_typeB) {
    SolutionType type = (inst.route == Route::PQ_typeA) ? SolutionType::a
                                                        : SolutionType::b;
    Real alpha = linforms::eval_alpha(tr, prec);
    Real log_beta = linforms::eval_beta(tr, prec).log();
    auto lf = linforms::make_instance(tr, type, inst.sign, inst.y2_sign);
    inst.kappa = alpha.log() / log_beta;
    inst.mu = linforms::eval_gamma(lf, prec).log() / log_beta;
    if (type == SolutionType::a) {
      inst.A = Real::from_ratio(117, 10, prec) / log_beta;
    } else {
      inst.A = Real::from_ratio(22, 5, prec) *
               Real::from_int(tr.a * tr.a, prec) / log_beta;
    }
    inst.B = alpha;
    return;
  }
  // VW route on a c3 triple: m*log((s+sqrt(ac))/2) - n*log((t+sqrt(bc))/2)
  // + log(mu-numerator), majorized by 2ac*((s+sqrt(ac))/2)^(-2m)
  Real beta_s = (Real::from_int(tr.s, prec) +
                 Real::from_int(tr.a * tr.c, prec).sqrt()) /
                Real::from_long(2, prec);
  Real log_delta = ((Real::from_int(tr.t, prec) +
                     Real::from_int(tr.b * tr.c, prec).sqrt()) /
                    Real::from_long(2, prec))
                       .log();
  Int z0, x0, z1, y1;
  if (inst.route == Route::VW_even) {
    z0 = inst.sign * 2;
    z1 = inst.sign * 2;
    x0 = 2;
    y1 = 2;
  } else {
    x0 = tr.r;
    y1 = tr.r;
    z0 = inst.sign * tr.t;
    z1 = inst.sign * tr.s;
  }
  Real num = Real::from_int(tr.b, prec).sqrt() * surd_combo(x0, tr.c, z0, tr.a, prec);
  Real den = Real::from_int(tr.a, prec).sqrt() * surd_combo(y1, tr.c, z1, tr.b, prec);
  inst.kappa = beta_s.log() / log_delta;
  inst.mu = (num / den).log() / log_delta;
  inst.A = Real::from_long(2, prec) * Real::from_int(tr.a * tr.c, prec) / log_delta;
  inst.B = beta_s.pow_int(2);
}

// Fallback for the case where mu is (numerically) a lattice point u*kappa - v:
// then l*kappa - m + mu = (l-u)*kappa - (m-v) + eps with a certified tiny
// residue eps, and |l'*kappa - m'| >= ||q_j*kappa|| for every 1 <= l' <= M by
// the best-approximation property of the largest denominator q_j <= M. This
// happens structurally on c1 triples (gamma = (beta/alpha)^2 for z0 = -2),
// where the inhomogeneous lemma's eta is negative for every convergent.
bool homogeneous_fallback(const ReductionInstance& work, const Int& M,
                          long prec, ReductionOutcome& out) {
  // nearest lattice relation mu + u*kappa = v over small u
  bool have = false;
  long best_u = 0;
  Real best_eps(prec);
  for (long u = -4; u <= 4; ++u) {
    Real shifted = work.mu + Real::from_long(u, prec) * work.kappa;
    Real eps = shifted.dist_nearest_int();
    if (!have || mpfr_cmp(eps.hi(), best_eps.hi()) < 0) {
      have = true;
      best_u = u;
      best_eps = eps;
    }
  }
  if (!have) return false;
  // largest continued-fraction denominator of kappa not exceeding M + 4
  // (indices shift by |u|)
  Int search_cap = M + 4;
  Int q_j = 1;
  try {
    CFCursor cursor(work.kappa);
    Int prev = 1;
    while (true) {
      auto [p, q] = cursor.next_convergent(Int(0));
      (void)p;
      if (q > search_cap) break;
      prev = q;
    }
    q_j = prev;
  } catch (const PrecisionExhausted&) {
    return false;
  }
  Real zeta = (work.kappa * Real::from_int(q_j, prec)).dist_nearest_int();
  Real margin = zeta - best_eps;
  if (!margin.certainly_positive()) return false;
  Real expr = (work.A / margin).log() / work.B.log();
  Int new_bound = expr.floor_upper();
  if (new_bound < best_u) new_bound = best_u;
  if (new_bound < 0) new_bound = 0;
  out.new_bound = new_bound;
  out.step = ReductionStep{0, q_j, 0, 1, new_bound, prec};
  return true;
}

}  // namespace

ReductionInstance build_reduction(const Triple& t, Route route, int sign,
                                  int y2_sign, const Int& M, long prec) {
  if (M < 1) throw Error("build_reduction: M must be >= 1");
  if (sign != 1 && sign != -1) throw Error("build_reduction: sign must be +-1");
  ReductionInstance inst;
  inst.triple = t;
  inst.route = route;
  inst.sign = sign;
  inst.y2_sign = (route == Route::PQ_typeB) ? y2_sign : 1;
  inst.M = M;
  evaluate(inst, prec > 0 ? prec : exact::precision_for_bound(M));
  return inst;
}

ReductionOutcome dp_reduce(const ReductionInstance& inst) {
  Int q_min = 6 * inst.M;
  Real rM = Real::from_int(inst.M, inst.prec);
  long prec = inst.prec;
  ReductionInstance work = inst;
  for (int escalation = 0; escalation <= 5; ++escalation) {
    if (escalation > 0) {
      prec = std::min(2 * prec, exact::kMaxPrecision);
      evaluate(work, prec);
      rM = Real::from_int(inst.M, prec);
    }
    CFCursor cursor(work.kappa);
    int tried = 0;
    int successes = 0;
    bool found = false;
    ReductionOutcome best;
    // each certified convergent yields a sound bound on its own; walking a
    // few past the first success often shrinks the bound considerably
    while (tried < 50 && successes < 10) {
      Int p, q;
      try {
        std::tie(p, q) = cursor.next_convergent(q_min);
      } catch (const PrecisionExhausted&) {
        break;
      }
      ++tried;
      Real rq = Real::from_int(q, prec);
      Real eta = (work.mu * rq).dist_nearest_int() -
                 rM * (work.kappa * rq).dist_nearest_int();
      if (!eta.certainly_positive()) continue;
      ++successes;
      Real expr = (work.A * rq / eta).log() / work.B.log();
      Int new_bound = expr.floor_upper();
      if (new_bound < 0) new_bound = 0;
      if (!found || new_bound < best.new_bound) {
        found = true;
        best.new_bound = new_bound;
        best.step = ReductionStep{p, q, tried, 1, new_bound, prec};
      }
    }
    // the lattice-shift bound is certified independently; keep whichever is
    // smaller (it is the only one available when mu is a lattice point of
    // (1, kappa), where eta < 0 for every convergent)
    ReductionOutcome shifted;
    if (homogeneous_fallback(work, inst.M, prec, shifted) &&
        (!found || shifted.new_bound < best.new_bound)) {
      best = shifted;
      found = true;
    }
    if (found) return best;
  }
  throw NoUsefulConvergent(
      "dp_reduce: no convergent certified eta > 0 after 5 precision "
      "escalations");
}

IteratedReduction iterate_reduce(const ReductionInstance& inst) {
  IteratedReduction result;
  result.final_bound = inst.M;
  ReductionInstance cur = inst;
  for (int iter = 0; iter < 10; ++iter) {
    if (cur.M <= 1) break;
    ReductionOutcome out = dp_reduce(cur);
    if (out.new_bound >= cur.M) break;
    result.steps.push_back(out.step);
    result.final_bound = out.new_bound;
    Int next = out.new_bound < 1 ? Int(1) : out.new_bound;
    cur = build_reduction(inst.triple, inst.route, inst.sign, inst.y2_sign,
                          next);
  }
  return result;
}

}  // namespace d4quad::reduction
