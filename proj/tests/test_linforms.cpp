#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "d4quad/linforms.hpp"

using namespace d4quad;
using exact::Real;
using linforms::BranchType;
using tuples::Family;
using tuples::SolutionType;

namespace {

bool contains(const Real& r, double v) {
  return mpfr_cmp_d(r.lo(), v) <= 0 && mpfr_cmp_d(r.hi(), v) >= 0;
}

bool close(const Real& r, double v) {
  return std::abs(r.approx() - v) <= 1e-14 * std::max(1.0, std::abs(v));
}

}  // namespace

TEST_CASE("Baker-theory constant C(j, chi)") {
  Real c31 = linforms::matveev_C(3, 1, 256);
  // reference value 1.3901e11, required within 0.01%
  CHECK(std::abs(c31.approx() / 1.3901e11 - 1.0) < 1e-4);
  // the 2^(6j+20) cutoff takes over for large j
  Real c9 = linforms::matveev_C(9, 1, 256);
  CHECK(c9.approx() <= std::pow(2.0, 74) * 1.000001);
  CHECK_THROWS_AS(linforms::matveev_C(0, 1), Error);
  CHECK_THROWS_AS(linforms::matveev_C(3, 3), Error);
}

TEST_CASE("algebraic numbers of the linear form") {
  auto t = tuples::make_triple(Int(24), Int(48), Int(140));
  Real alpha = linforms::eval_alpha(t, 192);
  Real beta = linforms::eval_beta(t, 192);
  CHECK(close(alpha, (34.0 + std::sqrt(24.0 * 48.0)) / 2.0));
  CHECK(close(beta, (58.0 + std::sqrt(24.0 * 140.0)) / 2.0));
  CHECK(alpha.certainly_less(beta));
  // alpha is a unit: alpha * (r - sqrt(ab))/2 = 1
  Real conj = (Real::from_int(t.r, 192) -
               Real::from_int(t.a * t.b, 192).sqrt()) /
              Real::from_long(2, 192);
  CHECK(contains(alpha * conj, 1.0));
}

TEST_CASE("instance construction fixes the initial terms") {
  auto t = tuples::make_triple(Int(24), Int(48), Int(140));
  auto ia = linforms::make_instance(t, SolutionType::a, -1, -1);
  CHECK(ia.z0 == -2);
  CHECK(ia.x0 == 2);
  CHECK(ia.y2 == 2);  // the z0 = +-2 configuration pins y2 = +2
  CHECK(ia.x2 == 2);
  auto ib = linforms::make_instance(t, SolutionType::b, -1, -1);
  CHECK(ib.z0 == -t.t);
  CHECK(ib.x0 == t.r);
  CHECK(ib.y2 == -2);
}

TEST_CASE("the linear form matches its definition numerically") {
  auto t = tuples::make_triple(Int(24), Int(48), Int(140));
  auto inst = linforms::make_instance(t, SolutionType::b, 1, 1);
  double la = std::log((34.0 + std::sqrt(24.0 * 48.0)) / 2.0);
  double lb = std::log((58.0 + std::sqrt(24.0 * 140.0)) / 2.0);
  double g = std::sqrt(140.0) * (2.0 * std::sqrt(24.0) + 2.0 * std::sqrt(48.0)) /
             (std::sqrt(48.0) * (82.0 * std::sqrt(24.0) + 34.0 * std::sqrt(140.0)));
  double expected = 3.0 * la - 2.0 * lb + std::log(g);
  Real lam = linforms::eval_lambda(inst, 3, 2, 256);
  CHECK(std::abs(lam.approx() - expected) < 1e-9);
}

TEST_CASE("the trivial solution satisfies the decay envelope") {
  // k=2, p=2, c2+: the (l, m) = (3, 1) closed-form solution
  auto t = tuples::c_family(pell::pair_at(2, 2), Family::c2p).sorted;
  auto inst = linforms::make_instance(t, SolutionType::b, 1, 1);
  Real lam = linforms::eval_lambda(inst, 3, 1, 256);
  Real bound = linforms::lambda_bound(inst, 1, 256);
  CHECK(lam.certainly_positive());
  CHECK(lam.certainly_less(bound));
}

TEST_CASE("decay envelope shrinks with m and rejects m < 1") {
  auto t = tuples::make_triple(Int(24), Int(48), Int(140));
  auto inst = linforms::make_instance(t, SolutionType::a, 1, 1);
  Real b1 = linforms::lambda_bound(inst, 1, 192);
  Real b2 = linforms::lambda_bound(inst, 2, 192);
  CHECK(b2.certainly_less(b1));
  CHECK_THROWS_AS(linforms::lambda_bound(inst, 0, 192), Error);
}

TEST_CASE("height bound for the algebraic factor") {
  auto t = tuples::c_family(pell::pair_at(2, 2), Family::c2p).sorted;
  for (SolutionType type : {SolutionType::a, SolutionType::b}) {
    for (int z0_sign : {1, -1}) {
      auto inst = linforms::make_instance(t, type, z0_sign, 1);
      Real h = linforms::height_gamma(inst, 2, 256);
      Real cap = (Real::from_ratio(107, 10, 256) *
                  Real::from_int(t.c * t.c, 256))
                     .log() *
                 Real::from_ratio(3, 4, 256);
      CHECK(h.certainly_positive());
      CHECK(mpfr_cmp(h.hi(), cap.hi()) <= 0);
    }
  }
}

TEST_CASE("certified solver of n / log(en) < K log^2(X)") {
  Real X = Real::from_long(100, 192);
  Int n1 = linforms::solve_index_bound(1e6, X, linforms::BoundForm::l_over_log_el);
  Int n2 = linforms::solve_index_bound(2e6, X, linforms::BoundForm::l_over_log_el);
  CHECK(n1 > 1000);
  CHECK(n2 > n1);  // monotone in K
  // returned n still satisfies the inequality, n+1 does not (approximately)
  double lhs = n1.get_d() / std::log(std::exp(1.0) * n1.get_d());
  double rhs = 1e6 * std::pow(std::log(100.0), 2.0);
  CHECK(lhs < rhs);
  double lhs_next = (n1.get_d() * 1.01) / std::log(std::exp(1.0) * n1.get_d() * 1.01);
  CHECK(lhs_next > rhs);
}

TEST_CASE("per-branch index caps and gap floors") {
  // degenerate family element: no branch
  auto rb0 = linforms::route_bound(2, pell::pair_at(2, 1), 1, -1,
                                   BranchType::type_a);
  CHECK_FALSE(rb0.defined);
  // live branch with a frozen Baker cap
  auto rb = linforms::route_bound(2, pell::pair_at(2, 2), 1, -1,
                                  BranchType::type_a);
  CHECK(rb.defined);
  CHECK(rb.admissible);
  CHECK(rb.cap == Int("100401118640784369"));
  CHECK(rb.gap == 1);
  // far out, the gap floor overtakes the cap and the branch closes
  auto far = linforms::route_bound(2, pell::pair_at(2, 120), 1, 1,
                                   BranchType::type_a);
  CHECK(far.defined);
  CHECK_FALSE(far.admissible);
}

TEST_CASE("route compatibility is enforced") {
  CHECK_THROWS_AS(linforms::p_bound(2, 1, BranchType::type_b),
                  UnsupportedFamily);
  CHECK_THROWS_AS(linforms::p_bound(2, 2, BranchType::vw_even),
                  UnsupportedFamily);
  CHECK_THROWS_AS(linforms::p_bound(2, 3, BranchType::type_a),
                  UnsupportedFamily);
  CHECK_THROWS_AS(linforms::p_bound(2, 4, BranchType::type_a),
                  UnsupportedFamily);
}

TEST_CASE("largest admissible pair index for one route") {
  auto pb = linforms::p_bound(2, 2, BranchType::type_b);
  CHECK(pb.p_max == 28);
  // cap within a factor of 2 of 2.82e20
  CHECK(pb.index_cap > Int("141000000000000000000"));
  CHECK(pb.index_cap < Int("564000000000000000000"));
}
