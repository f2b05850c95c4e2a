#pragma once

#include "d4quad/linforms.hpp"

namespace d4quad::reduction {

using exact::Real;
using tuples::SolutionType;
using tuples::Triple;

enum class Route { PQ_typeA, PQ_typeB, VW_even, VW_odd };
Route route_from_name(const std::string& name);
std::string route_name(Route r);

/// One Baker-Davenport instance 0 < l*kappa - m + mu < A * B^(-l), frozen
/// after build. The exact defining data (triple, route, signs) is retained so
/// kappa/mu/A/B can be rebuilt verbatim at a higher precision.
struct ReductionInstance {
  Triple triple;
  Route route = Route::PQ_typeA;
  int sign = 1;     // z0 sign (PQ) / family sign sigma (VW)
  int y2_sign = 1;  // gamma numerator sign, PQ Type b only
  Int M;
  long prec = exact::kDefaultPrecision;
  Real kappa, mu, A, B;
};

struct ReductionStep {
  Int p, q;               // convergent that certified eta > 0
  int convergents_tried;  // how many were examined, including this one
  int eta_sign;           // always +1 on success
  Int new_bound;
  long prec;  // working precision of the step
};

struct ReductionOutcome {
  Int new_bound;
  ReductionStep step;
};

/// M comes from linforms::p_bound (or a previous reduction). prec = 0 selects
/// the precision policy max(192, 2*log2(6M) + 64).
ReductionInstance build_reduction(const Triple& t, Route route, int sign,
                                  int y2_sign, const Int& M, long prec = 0);

/// One reduction: walks convergents of kappa with q > 6M until
/// eta = ||mu*q|| - M*||kappa*q|| > 0 is certified, then returns
/// floor(log(A*q/eta)/log(B)). Retries up to 50 convergents, then doubles
/// precision and rebuilds, at most 5 times.
ReductionOutcome dp_reduce(const ReductionInstance& inst);

struct IteratedReduction {
  Int final_bound;
  std::vector<ReductionStep> steps;
};

/// Repeats dp_reduce with M <- new_bound until the bound stops decreasing.
IteratedReduction iterate_reduce(const ReductionInstance& inst);

}  // namespace d4quad::reduction
