#pragma once

#include <vector>

#include "d4quad/tuples.hpp"

namespace d4quad::seq {

using pell::D4Pair;
using tuples::SolutionType;
using tuples::Triple;

/// A second-order recurrence u_{i+2} = coeff*u_{i+1} - u_i, with initial
/// terms stored doubled (2*u0, 2*u1) so half-integer sequences (T_nu, U_nu)
/// stay in exact integer arithmetic.
struct RecurrenceSpec {
  Int coeff;
  Int du0;  // 2*u0
  Int du1;  // 2*u1
  bool integral = true;  // whether the undoubled terms are integers
};

constexpr unsigned long kExactIndexCap = 1'000'000;

/// Exact i-th doubled term 2*u_i.
Int term_doubled(const RecurrenceSpec& spec, unsigned long i);

/// Exact i-th term; throws HalfIntegerLeak when a sequence declared
/// integral produces an odd doubled value.
Int term(const RecurrenceSpec& spec, unsigned long i);

/// u_i mod M via 2x2 matrix exponentiation mod 2M (integral sequences only);
/// works for arbitrarily large i.
Int term_mod(const RecurrenceSpec& spec, const Int& i, const Int& M);

// --- sequence constructors over a sorted triple (a < b < c) ---

// x = P_l = Q_m route (equations aY^2-bX^2=4(a-b) and az^2-cx^2=4(a-c))
RecurrenceSpec seq_P(const Triple& t, int y2_sign);
RecurrenceSpec seq_Q(const Triple& t, SolutionType type, int z0_sign);
// y = A_n = B_l route
RecurrenceSpec seq_A(const Triple& t, const Int& z1, const Int& y1);
RecurrenceSpec seq_B(const Triple& t, const Int& y2, const Int& x2);
// z = v_m = w_n route
RecurrenceSpec seq_v(const Triple& t, const Int& z0, const Int& x0);
RecurrenceSpec seq_w(const Triple& t, const Int& z1, const Int& y1);
// half-integer Pell powers for the pair: alpha^nu = T_nu + U_nu*sqrt(ab)
RecurrenceSpec seq_T(const Int& r);
RecurrenceSpec seq_U(const Int& r);

/// Initial terms (z0, x0) of the Q/v sequences for the given type and sign.
std::pair<Int, Int> initial_terms_Q(const Triple& t, SolutionType type,
                                    int z0_sign);

/// Closed-form residue of Q_{2m} from the congruence lemma:
/// x0 + a(c*x0*m^2 + s*z0*m)/2, mod a^2 (a odd) or a^2/2 (a even).
Int congruence_Q2m(const Int& a, const Int& c, const Int& s, const Int& z0,
                   const Int& x0, const Int& m);
/// Same closed form for P_{2l}: x2 + a(b*x2*l^2 + r*y2*l)/2.
Int congruence_P2l(const Int& a, const Int& b, const Int& r, const Int& y2,
                   const Int& x2, const Int& l);
/// The modulus the closed forms live in.
Int congruence_modulus(const Int& a);

/// Verifies the four index-shift identities
/// v_{(cr-st)/2, m} = v_{-t, m+1}, v_{-(cr-st)/2, m+1} = v_{t, m} (and the
/// w analogues with s in place of t) for all indices up to depth.
bool shift_identity_check(const Triple& t, unsigned depth);

struct TrivialSolution {
  Int x;  // x = Q_1 = P_{nu+1}
  Int d;  // (x^2 - 4) / a
  Int c;  // c_nu^sign (0 when the family degenerates)
};

/// The solution x = Q_1 = P_{nu+1} = r(T_nu +- a U_nu) + a(b U_nu +- T_nu)
/// of the pair's P/Q intersection, with d = (x^2-4)/a checked to equal d- or
/// d+ of {a, b, c_nu^sign}.
TrivialSolution trivial_solution(const D4Pair& pair, int nu, int sign);

}  // namespace d4quad::seq
