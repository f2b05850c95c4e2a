#include "d4quad/sequences.hpp"

namespace d4quad::seq {

Int term_doubled(const RecurrenceSpec& spec, unsigned long i) {
  if (i > kExactIndexCap) {
    throw Error("term: exact evaluation capped at index 10^6; use term_mod");
  }
  if (i == 0) return spec.du0;
  Int prev = spec.du0, cur = spec.du1;
  for (unsigned long j = 1; j < i; ++j) {
    Int next = spec.coeff * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Int term(const RecurrenceSpec& spec, unsigned long i) {
  Int d = term_doubled(spec, i);
  if (d % 2 != 0) {
    if (spec.integral) {
      throw HalfIntegerLeak("integral sequence produced odd doubled term at index " +
                            std::to_string(i));
    }
    throw HalfIntegerLeak("term at index " + std::to_string(i) +
                          " is a half-integer; use term_doubled");
  }
  return d / 2;
}

namespace {

struct Mat2 {
  Int a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 mul_mod(const Mat2& x, const Mat2& y, const Int& mod) {
  return {(x.a * y.a + x.b * y.c) % mod, (x.a * y.b + x.b * y.d) % mod,
          (x.c * y.a + x.d * y.c) % mod, (x.c * y.b + x.d * y.d) % mod};
}

Mat2 pow_mod(Mat2 base, Int e, const Int& mod) {
  Mat2 acc{1, 0, 0, 1};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(acc, base, mod);
    e >>= 1;
    if (e > 0) base = mul_mod(base, base, mod);
  }
  return acc;
}

Int positive_mod(Int v, const Int& mod) {
  v %= mod;
  if (v < 0) v += mod;
  return v;
}

}  // namespace

Int term_mod(const RecurrenceSpec& spec, const Int& i, const Int& M) {
  if (M < 1) throw Error("term_mod: modulus must be >= 1");
  if (i < 0) throw Error("term_mod: index must be >= 0");
  if (!spec.integral) throw Error("term_mod: defined for integral sequences only");
  Int mod2 = 2 * M;
  // (du_{i+1}, du_i)^T = [[coeff, -1], [1, 0]]^i (du_1, du_0)^T
  Mat2 m = pow_mod(Mat2{positive_mod(spec.coeff, mod2), mod2 - 1, 1, 0}, i, mod2);
  Int dui = positive_mod(m.c * spec.du1 + m.d * spec.du0, mod2);
  if (dui % 2 != 0) throw HalfIntegerLeak("term_mod: odd doubled residue");
  return (dui / 2) % M;
}

RecurrenceSpec seq_P(const Triple& t, int y2_sign) {
  Int y2 = y2_sign * 2;
  return {t.r, 4, 2 * t.r + t.a * y2, true};
}

std::pair<Int, Int> initial_terms_Q(const Triple& t, SolutionType type,
                                    int z0_sign) {
  if (type == SolutionType::a) return {Int(z0_sign * 2), Int(2)};
  return {z0_sign * t.t, t.r};
}

RecurrenceSpec seq_Q(const Triple& t, SolutionType type, int z0_sign) {
  auto [z0, x0] = initial_terms_Q(t, type, z0_sign);
  return {t.s, 2 * x0, t.s * x0 + t.a * z0, true};
}

RecurrenceSpec seq_A(const Triple& t, const Int& z1, const Int& y1) {
  return {t.t, 2 * y1, t.t * y1 + t.b * z1, true};
}

RecurrenceSpec seq_B(const Triple& t, const Int& y2, const Int& x2) {
  return {t.r, 2 * y2, t.r * y2 + t.b * x2, true};
}

RecurrenceSpec seq_v(const Triple& t, const Int& z0, const Int& x0) {
  return {t.s, 2 * z0, t.s * z0 + t.c * x0, true};
}

RecurrenceSpec seq_w(const Triple& t, const Int& z1, const Int& y1) {
  return {t.t, 2 * z1, t.t * z1 + t.c * y1, true};
}

RecurrenceSpec seq_T(const Int& r) { return {r, 2, r, false}; }

RecurrenceSpec seq_U(const Int& r) { return {r, 0, 1, false}; }

Int congruence_modulus(const Int& a) {
  return (a % 2 == 0) ? Int(a * a / 2) : Int(a * a);
}

namespace {
Int closed_form(const Int& a, const Int& p1, const Int& x_init, const Int& s1,
                const Int& z_init, const Int& idx) {
  // x_init + a*(p1*x_init*idx^2 + s1*z_init*idx)/2, reduced mod the lemma modulus
  Int num = 2 * x_init + a * (p1 * x_init * idx * idx + s1 * z_init * idx);
  if (num % 2 != 0) throw HalfIntegerLeak("congruence closed form: odd numerator");
  return positive_mod(num / 2, congruence_modulus(a));
}
}  // namespace

Int congruence_Q2m(const Int& a, const Int& c, const Int& s, const Int& z0,
                   const Int& x0, const Int& m) {
  return closed_form(a, c, x0, s, z0, m);
}

Int congruence_P2l(const Int& a, const Int& b, const Int& r, const Int& y2,
                   const Int& x2, const Int& l) {
  return closed_form(a, b, x2, r, y2, l);
}

namespace {
// x0 with a*z0^2 - c*x0^2 = 4(a - c), recovered by exact square root
Int x0_for_z0(const Triple& t, const Int& z0) {
  Int num = t.a * z0 * z0 + 4 * (t.c - t.a);
  if (num % t.c != 0) throw Error("shift check: no matching x0");
  Int x0;
  if (!is_perfect_square(num / t.c, &x0)) throw Error("shift check: no matching x0");
  return x0;
}
Int y1_for_z1(const Triple& t, const Int& z1) {
  Int num = t.b * z1 * z1 + 4 * (t.c - t.b);
  if (num % t.c != 0) throw Error("shift check: no matching y1");
  Int y1;
  if (!is_perfect_square(num / t.c, &y1)) throw Error("shift check: no matching y1");
  return y1;
}
}  // namespace

bool shift_identity_check(const Triple& t, unsigned depth) {
  Int shift_num = t.c * t.r - t.s * t.t;
  if (shift_num % 2 != 0) return false;
  Int zs = shift_num / 2;
  auto v_of = [&](const Int& z0) { return seq_v(t, z0, x0_for_z0(t, z0)); };
  auto w_of = [&](const Int& z1) { return seq_w(t, z1, y1_for_z1(t, z1)); };
  RecurrenceSpec v_zs = v_of(zs), v_mzs = v_of(-zs);
  RecurrenceSpec v_t = v_of(t.t), v_mt = v_of(-t.t);
  RecurrenceSpec w_zs = w_of(zs), w_mzs = w_of(-zs);
  RecurrenceSpec w_s = w_of(t.s), w_ms = w_of(-t.s);
  for (unsigned m = 0; m <= depth; ++m) {
    if (term_doubled(v_zs, m) != term_doubled(v_mt, m + 1)) return false;
    if (term_doubled(v_mzs, m + 1) != term_doubled(v_t, m)) return false;
    if (term_doubled(w_zs, m) != term_doubled(w_ms, m + 1)) return false;
    if (term_doubled(w_mzs, m + 1) != term_doubled(w_s, m)) return false;
  }
  return true;
}

TrivialSolution trivial_solution(const D4Pair& pair, int nu, int sign) {
  if (nu < 1 || nu > 3) throw UnsupportedFamily("trivial_solution: nu must be 1..3");
  if (sign != 1 && sign != -1) throw Error("trivial_solution: sign must be +-1");
  const Int& a = pair.a;
  const Int b = pair.b();
  const Int& r = pair.r;
  Int dT = term_doubled(seq_T(r), static_cast<unsigned long>(nu));
  Int dU = term_doubled(seq_U(r), static_cast<unsigned long>(nu));
  // x = r(T_nu +- a U_nu) + a(b U_nu +- T_nu), evaluated in doubled form
  Int dx = r * (dT + sign * a * dU) + a * (b * dU + sign * dT);
  if (dx % 2 != 0) throw HalfIntegerLeak("trivial_solution: odd doubled x");
  Int x = dx / 2;

  // x must equal P_{nu+1} with y2 = sign*2 for the pair equation
  RecurrenceSpec p_seq{r, 4, 2 * r + sign * 2 * a, true};
  if (term(p_seq, static_cast<unsigned long>(nu) + 1) != x) {
    throw Error("trivial_solution: x != P_{nu+1}");
  }

  TrivialSolution out;
  out.x = x;
  Int xx = x * x - 4;
  if (xx % a != 0) throw Error("trivial_solution: (x^2-4) not divisible by a");
  out.d = xx / a;

  Int c = 0;
  try {
    auto tc = tuples::c_family(pair, tuples::family_of(nu, sign));
    c = tc.c;
    // x must also equal Q_1 of the triple with z0 = +t, x0 = r
    Int q1_num = tc.s * r + a * tc.t;
    if (q1_num % 2 != 0 || q1_num / 2 != x) {
      throw Error("trivial_solution: x != Q_1");
    }
  } catch (const DegenerateC&) {
    // c = 0: the extension collapses, d still matches d_pm of {0, a, b}
  }
  out.c = c;
  auto [dm, dp] = tuples::d_pm(c, a, b);
  if (out.d != dm && out.d != dp) {
    throw Error("trivial_solution: d is neither d- nor d+ of the triple");
  }
  return out;
}

}  // namespace d4quad::seq
