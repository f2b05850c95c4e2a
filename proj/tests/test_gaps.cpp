#include <doctest.h>

#include "d4quad/gaps.hpp"

using namespace d4quad;
using gaps::Parity;

TEST_CASE("index floor for z0 = +-2 solutions") {
  CHECK(gaps::lower_type_a(Int(4)) == 1);
  CHECK(gaps::lower_type_a(Int(24)) == 1);
  CHECK(gaps::lower_type_a(Int(140)) == 1);
  CHECK(gaps::lower_type_a(Int(161564)) == 3);
  CHECK(gaps::lower_type_a(Int(81090)) == 3);
  CHECK(gaps::lower_type_a(Int(38804)) == 2);
  CHECK_THROWS_AS(gaps::lower_type_a(Int(0)), Error);
}

TEST_CASE("index floor for z0 = +-t solutions grows linearly in a") {
  CHECK(gaps::lower_type_b(Int(24), 2) == 2);
  CHECK(gaps::lower_type_b(Int(8), 3) == 2);
  CHECK(gaps::lower_type_b(Int(40), 6) == 3);
  CHECK(gaps::lower_type_b(Int(161564), 2) == 9801);
  CHECK(gaps::lower_type_b(Int(81090), 3) == 18817);
  CHECK(gaps::lower_type_b(Int(38804), 6) == 2401);
  CHECK_THROWS_AS(gaps::lower_type_b(Int(10), 5), UnsupportedK);
}

TEST_CASE("index floor for the largest-element route") {
  // triple {4, 8, 28560}
  CHECK(gaps::lower_vw(Int(8), Int(28560), Parity::even) == 30);
  CHECK(gaps::lower_vw(Int(8), Int(28560), Parity::odd) == 2);
  CHECK(gaps::lower_vw(Int(1), Int(1), Parity::even) >= 1);
  CHECK_THROWS_AS(gaps::lower_vw(Int(10), Int(5), Parity::even), Error);
}

TEST_CASE("index floors are monotone in the triple size") {
  Int prev_a = 1, prev_b = 1;
  for (unsigned p = 1; p <= 8; ++p) {
    auto pair = pell::pair_at(2, p);
    Int cur_a = gaps::lower_type_a(pair.a);
    Int cur_b = gaps::lower_type_b(pair.a, 2);
    CHECK(cur_a >= prev_a);
    CHECK(cur_b >= prev_b);
    prev_a = cur_a;
    prev_b = cur_b;
  }
}

TEST_CASE("the s = +-a congruence branch needs a large enough r") {
  CHECK_THROWS_AS(gaps::exclusion_c2_s_congruence(pell::pair_at(2, 1)),
                  InapplicableSmallR);
  auto cert = gaps::exclusion_c2_s_congruence(pell::pair_at(2, 2));
  CHECK(cert.ok);
  CHECK(cert.r == 34);
  CHECK(cert.k == 2);
}
