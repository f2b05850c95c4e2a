#pragma once

#include "d4quad/gaps.hpp"
#include "d4quad/sequences.hpp"
#include "d4quad/tuples.hpp"

namespace d4quad::linforms {

using exact::Real;
using tuples::Family;
using tuples::SolutionType;
using tuples::Triple;

/// The linear form Lambda = l*log(alpha) - m*log(beta) + log(gamma) over a
/// sorted triple, together with the initial-term data defining gamma.
struct LinearFormInstance {
  Triple triple;
  SolutionType type = SolutionType::a;
  int z0_sign = 1;
  int y2_sign = 1;
  // initial terms implied by (type, signs): x2 = 2 always
  Int z0, x0, y2, x2;
};

LinearFormInstance make_instance(const Triple& t, SolutionType type,
                                 int z0_sign, int y2_sign);

Real eval_alpha(const Triple& t, long prec);  // (r + sqrt(ab)) / 2
Real eval_beta(const Triple& t, long prec);   // (s + sqrt(ac)) / 2
Real eval_gamma(const LinearFormInstance& inst, long prec);
/// Exactly evaluated Lambda at indices (l, m).
Real eval_lambda(const LinearFormInstance& inst, long l, long m, long prec);

/// The majorant 11.7*beta^(-2m) (Type a) / 4.4*a^2*beta^(-2m) (Type b),
/// outward rounded. m >= 1.
Real lambda_bound(const LinearFormInstance& inst, long m, long prec);

/// Matveev's constant C(j, chi) = min{(1/chi)(ej/2)^chi 30^(j+3) j^3.5, 2^(6j+20)}.
Real matveev_C(int j, int chi, long prec = exact::kDefaultPrecision);

/// Certified upper bound for the logarithmic height of gamma from its
/// degree-4 conjugate set with leading coefficient 16 k^2 (c-a)^2; never
/// exceeds (3/4) log(10.7 c^2).
Real height_gamma(const LinearFormInstance& inst, int k, long prec);

enum class BoundForm {
  l_over_log_el,   // largest n with n / log(e*n) < K log^2(X)
  m_over_log_m1,   // largest n with n / log(n+1) < K log^2(X)
};

/// Solves the index inequality by certified monotone bisection.
Int solve_index_bound(double K, const Real& X, BoundForm form,
                      long prec = exact::kDefaultPrecision);

enum class BranchType { type_a, type_b, vw_even, vw_odd };
BranchType branch_from_name(const std::string& name);
std::string branch_name(BranchType t);

struct RouteBound {
  bool defined = false;     // false when the family element degenerates
  bool admissible = false;  // gap lower bound still below the index cap
  Int cap;  // cap on l (PQ routes) or on the half-index m (VW routes)
  Int gap;  // congruence gap lower bound on the same index
};

/// Matveev index cap and gap lower bound for one (pair, family, sign, branch).
RouteBound route_bound(int k, const pell::D4Pair& pair, int family, int sign,
                       BranchType type, long prec = exact::kDefaultPrecision);

struct PBound {
  int p_max = 0;
  Int index_cap;  // cap on l (PQ routes) or on the half-index m (VW routes)
};

/// Largest p for which the congruence gap lower bound at a_p stays below the
/// Baker-theory upper bound, recomputed exactly per p, plus the index cap at
/// that p. family is 1, 2 or 3.
PBound p_bound(int k, int family, BranchType type,
               long prec = exact::kDefaultPrecision);

}  // namespace d4quad::linforms
