#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace d4quad {

/// Arbitrary-precision integer. Values up to ~10^44 occur in the c3 families,
/// so nothing in the library ever goes through a machine word.
using Int = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : Error {
  using Error::Error;
};
struct UnsupportedK : Error {
  using Error::Error;
};
struct UnsupportedFamily : Error {
  using Error::Error;
};
struct NotAD4Pair : Error {
  using Error::Error;
};
struct NotATriple : Error {
  using Error::Error;
};
struct DegenerateC : Error {
  using Error::Error;
};
struct HalfIntegerLeak : Error {
  using Error::Error;
};
struct InapplicableSmallR : Error {
  using Error::Error;
};
struct NoUsefulConvergent : Error {
  using Error::Error;
};

/// floor(sqrt(n)), exact. n >= 0.
Int isqrt(const Int& n);

/// True iff n = m^2 for some m >= 0; writes m through `root` when non-null.
bool is_perfect_square(const Int& n, Int* root = nullptr);

namespace exact {

constexpr long kMinPrecision = 64;
constexpr long kDefaultPrecision = 192;
constexpr long kMaxPrecision = 1L << 20;

/// Working precision for a reduction with bound M: max(192, 2*log2(6M) + 64).
long precision_for_bound(const Int& M);

/// A real number known only as a closed interval [lo, hi] with
/// outward-rounded MPFR endpoints. Every strict inequality the proof
/// pipeline certifies goes through certainly_less / certainly_positive,
/// i.e. compares the appropriate endpoints, never midpoints.
class Real {
 public:
  explicit Real(long prec = kDefaultPrecision);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_int(const Int& n, long prec = kDefaultPrecision);
  static Real from_long(long n, long prec = kDefaultPrecision);
  /// Exact double (the constant itself, e.g. 0.495, as written in binary).
  static Real from_double(double d, long prec = kDefaultPrecision);
  static Real from_ratio(const Int& num, const Int& den,
                         long prec = kDefaultPrecision);
  static Real e(long prec = kDefaultPrecision);

  long precision() const { return prec_; }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;  // divisor must exclude 0
  Real operator-() const;

  Real sqrt() const;  // lo must be >= 0
  Real log() const;   // lo must be > 0
  Real abs() const;
  Real pow_int(long e) const;  // negative e allowed when interval excludes 0

  /// hi < o.lo: the inequality *this < o holds for every pair of members.
  bool certainly_less(const Real& o) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains_zero() const;

  /// floor of every member agrees; throws PrecisionExhausted otherwise.
  Int floor_certified() const;
  Int ceil_certified() const;
  /// Sound one-sided roundings (floor of the upper endpoint, etc.).
  Int floor_upper() const;
  Int floor_lower() const;
  Int ceil_lower() const;
  Int ceil_upper() const;
  Int nearest_int() const;  // nearest integer to the midpoint

  /// Distance to the nearest integer, as an interval. The lower endpoint is
  /// 0 whenever the interval may straddle an integer.
  Real dist_nearest_int() const;

  double approx() const;  // midpoint as double, for reports only
  std::string str(size_t digits = 20) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  long prec_;
};

Real operator*(long a, const Real& b);
Real operator+(long a, const Real& b);

/// Evaluates u*sqrt(X) + v*sqrt(Y) without catastrophic cancellation: a
/// mixed-sign combination is rationalized to (u^2 X - v^2 Y) / (u sqrt X - v sqrt Y).
Real surd_combo(const Int& u, const Int& X, const Int& v, const Int& Y,
                long prec);

/// Continued-fraction cursor over an interval target. Partial quotients are
/// emitted only while floor() of the remainder is certified at the working
/// precision; past that point PrecisionExhausted is thrown and the caller
/// rebuilds the target at higher precision.
class CFCursor {
 public:
  explicit CFCursor(Real target);

  /// First convergent (p, q) with q > q_min that has not been consumed yet.
  std::pair<Int, Int> next_convergent(const Int& q_min);

  const std::vector<Int>& partial_quotients() const { return quotients_; }
  std::pair<Int, Int> current() const { return {p_, q_}; }

 private:
  void advance();

  Real rem_;
  std::vector<Int> quotients_;
  Int pm1_, qm1_, p_, q_;
  bool started_ = false;
  bool consumed_current_ = true;
  bool exhausted_ = false;
};

}  // namespace exact
}  // namespace d4quad
