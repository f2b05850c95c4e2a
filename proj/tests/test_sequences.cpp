#include <doctest.h>

#include <random>

#include "d4quad/sequences.hpp"

using namespace d4quad;
using seq::RecurrenceSpec;
using tuples::Family;
using tuples::SolutionType;

TEST_CASE("doubled terms follow the recurrence") {
  RecurrenceSpec spec{Int(6), Int(4), Int(20), true};
  CHECK(seq::term_doubled(spec, 0) == 4);
  CHECK(seq::term_doubled(spec, 1) == 20);
  CHECK(seq::term_doubled(spec, 2) == 6 * 20 - 4);
  CHECK(seq::term(spec, 2) == (6 * 20 - 4) / 2);
  CHECK_THROWS_AS(seq::term_doubled(spec, seq::kExactIndexCap + 1), Error);
}

TEST_CASE("half-integer sequences refuse undoubled access when odd") {
  // T over r = 7 (a synthetic odd coefficient): T_1 = 7/2
  RecurrenceSpec t = seq::seq_T(Int(7));
  CHECK(seq::term_doubled(t, 1) == 7);
  CHECK_THROWS_AS(seq::term(t, 1), HalfIntegerLeak);
}

TEST_CASE("pair power sequences satisfy the unit norm identity") {
  // alpha^nu = T_nu + U_nu sqrt(ab) with alpha*conj(alpha) = 1 forces
  // (2T)^2 - ab (2U)^2 = 4 at every index
  for (int k : {2, 3, 6}) {
    for (unsigned p = 1; p <= 3; ++p) {
      auto pair = pell::pair_at(k, p);
      Int ab = pair.a * pair.b();
      RecurrenceSpec T = seq::seq_T(pair.r);
      RecurrenceSpec U = seq::seq_U(pair.r);
      for (unsigned long i = 0; i <= 10; ++i) {
        Int dT = seq::term_doubled(T, i);
        Int dU = seq::term_doubled(U, i);
        CHECK(dT * dT - ab * dU * dU == 4);
      }
    }
  }
}

TEST_CASE("Q-sequence values stay on the Pellian conic") {
  // every Q_m admits a z with a z^2 - c x^2 = 4(a - c)
  auto t = tuples::c_family(pell::pair_at(2, 2), Family::c2p).sorted;
  for (SolutionType type : {SolutionType::a, SolutionType::b}) {
    for (int z0_sign : {1, -1}) {
      RecurrenceSpec q = seq::seq_Q(t, type, z0_sign);
      for (unsigned long m = 0; m <= 6; ++m) {
        Int x = seq::term(q, m);
        Int num = t.c * x * x + 4 * (t.a - t.c);
        REQUIRE(num % t.a == 0);
        CHECK(is_perfect_square(num / t.a));
      }
    }
  }
}

TEST_CASE("P-sequence values stay on the pair conic") {
  auto t = tuples::c_family(pell::pair_at(3, 2), Family::c1p).sorted;
  for (int y2_sign : {1, -1}) {
    RecurrenceSpec pseq = seq::seq_P(t, y2_sign);
    for (unsigned long l = 0; l <= 6; ++l) {
      Int x = seq::term(pseq, l);
      Int num = t.b * x * x + 4 * (t.a - t.b);
      REQUIRE(num % t.a == 0);
      CHECK(is_perfect_square(num / t.a));
    }
  }
}

TEST_CASE("modular evaluation agrees with exact terms") {
  std::mt19937 rng(20260823);
  RecurrenceSpec spec{Int(34), Int(4), Int(80), true};
  for (int trial = 0; trial < 50; ++trial) {
    unsigned long i = rng() % 60;
    Int mod = Int(1 + rng() % 100000);
    Int exact_term = seq::term(spec, i);
    CHECK(seq::term_mod(spec, Int(static_cast<unsigned long>(i)), mod) ==
          ((exact_term % mod) + mod) % mod);
  }
  CHECK_THROWS_AS(seq::term_mod(spec, Int(3), Int(0)), Error);
  CHECK_THROWS_AS(seq::term_mod(spec, Int(-1), Int(5)), Error);
}

TEST_CASE("modular evaluation handles astronomic indices") {
  RecurrenceSpec spec{Int(34), Int(4), Int(80), true};
  Int huge("253497741035638850195");
  Int mod("1000003");
  // consistency through an index identity: u_{n+2} = coeff*u_{n+1} - u_n
  Int un = seq::term_mod(spec, huge, mod);
  Int un1 = seq::term_mod(spec, huge + 1, mod);
  Int un2 = seq::term_mod(spec, huge + 2, mod);
  CHECK((34 * un1 - un - un2) % mod == 0);
}

TEST_CASE("congruence closed forms match the even-index residues") {
  auto t = tuples::c_family(pell::pair_at(2, 3), Family::c2m).sorted;
  Int mod = seq::congruence_modulus(t.a);
  for (SolutionType type : {SolutionType::a, SolutionType::b}) {
    for (int z0_sign : {1, -1}) {
      auto [z0, x0] = seq::initial_terms_Q(t, type, z0_sign);
      RecurrenceSpec q = seq::seq_Q(t, type, z0_sign);
      for (long m = 0; m <= 8; ++m) {
        CHECK(seq::congruence_Q2m(t.a, t.c, t.s, z0, x0, Int(m)) ==
              seq::term_mod(q, Int(2 * m), mod));
      }
    }
  }
  for (int y2_sign : {1, -1}) {
    RecurrenceSpec pseq = seq::seq_P(t, y2_sign);
    for (long l = 0; l <= 8; ++l) {
      CHECK(seq::congruence_P2l(t.a, t.b, t.r, Int(y2_sign * 2), Int(2),
                                Int(l)) == seq::term_mod(pseq, Int(2 * l), mod));
    }
  }
  CHECK(seq::congruence_modulus(Int(7)) == 49);
  CHECK(seq::congruence_modulus(Int(8)) == 32);
}

TEST_CASE("index-shift identities of the largest-element sequences") {
  for (Family f : {Family::c3p, Family::c3m}) {
    auto t = tuples::c_family(pell::pair_at(2, 1), f).sorted;
    CHECK(seq::shift_identity_check(t, 6));
  }
  auto t6 = tuples::c_family(pell::pair_at(6, 2), Family::c3p).sorted;
  CHECK(seq::shift_identity_check(t6, 5));
}

TEST_CASE("closed-form solution x = Q_1 = P_{nu+1} and its extension d") {
  // spot value: k=2, p=2, nu=2, +: triple {24, 48, 161704}
  auto ts = seq::trivial_solution(pell::pair_at(2, 2), 2, 1);
  CHECK(ts.c == 161704);
  CHECK(ts.x * ts.x - 4 == 24 * ts.d);
  auto [dm, dp] = tuples::d_pm(Int(24), Int(48), Int(161704));
  CHECK((ts.d == dm || ts.d == dp));
  CHECK_THROWS_AS(seq::trivial_solution(pell::pair_at(2, 2), 4, 1),
                  UnsupportedFamily);
  CHECK_THROWS_AS(seq::trivial_solution(pell::pair_at(2, 2), 2, 0), Error);
}

TEST_CASE("closed-form solution exists for every family and sign") {
  for (int k : {2, 3, 6}) {
    for (unsigned p = 1; p <= 4; ++p) {
      auto pair = pell::pair_at(k, p);
      for (int nu : {1, 2, 3}) {
        for (int sign : {1, -1}) {
          auto ts = seq::trivial_solution(pair, nu, sign);
          CHECK((ts.x * ts.x - 4) % pair.a == 0);
          if (ts.c > 0) {
            auto [dm, dp] = tuples::d_pm(pair.a, pair.b(), ts.c);
            CHECK((ts.d == dm || ts.d == dp));
          }
        }
      }
    }
  }
}
