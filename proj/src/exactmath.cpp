#include "d4quad/exactmath.hpp"

#include <algorithm>
#include <cmath>

namespace d4quad {

Int isqrt(const Int& n) {
  if (n < 0) throw Error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
  return true;
}

namespace exact {

long precision_for_bound(const Int& M) {
  Int six_m = 6 * M;
  if (six_m < 1) six_m = 1;
  long bits = static_cast<long>(mpz_sizeinbase(six_m.get_mpz_t(), 2));
  return std::min(kMaxPrecision, std::max(kDefaultPrecision, 2 * bits + 64));
}

Real::Real(long prec) : prec_(std::max(prec, kMinPrecision)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Real::Real(const Real& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Real::~Real() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Real Real::from_int(const Int& n, long prec) {
  Real r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Real Real::from_long(long n, long prec) {
  Real r(prec);
  mpfr_set_si(r.lo_, n, MPFR_RNDD);
  mpfr_set_si(r.hi_, n, MPFR_RNDU);
  return r;
}

Real Real::from_double(double d, long prec) {
  Real r(prec);
  mpfr_set_d(r.lo_, d, MPFR_RNDD);
  mpfr_set_d(r.hi_, d, MPFR_RNDU);
  return r;
}

Real Real::from_ratio(const Int& num, const Int& den, long prec) {
  return from_int(num, prec) / from_int(den, prec);
}

Real Real::e(long prec) {
  Real one = from_long(1, prec);
  Real r(prec);
  mpfr_exp(r.lo_mut(), one.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), one.hi(), MPFR_RNDU);
  return r;
}

Real Real::operator+(const Real& o) const {
  Real r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Real Real::operator-() const {
  Real r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo: min over endpoint products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
  // hi: max over endpoint products rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Real Real::operator/(const Real& o) const {
  if (o.contains_zero()) throw Error("interval division by interval containing 0");
  Real r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Real Real::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw Error("interval sqrt of possibly-negative value");
  Real r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::log() const {
  if (mpfr_sgn(lo_) <= 0) throw Error("interval log of possibly-nonpositive value");
  Real r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::abs() const {
  Real r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  // straddles zero
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::pow_int(long e) const {
  if (e == 0) return from_long(1, prec_);
  bool neg = e < 0;
  unsigned long n = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Real base = *this;
  Real acc = from_long(1, prec_);
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  if (neg) return from_long(1, prec_) / acc;
  return acc;
}

bool Real::certainly_less(const Real& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Real::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Real::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Real::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

namespace {
Int mpfr_floor_to_int(const mpfr_t& x) {
  mpfr_t f;
  mpfr_init2(f, mpfr_get_prec(x));
  mpfr_rint_floor(f, x, MPFR_RNDD);
  Int r;
  mpfr_get_z(r.get_mpz_t(), f, MPFR_RNDN);
  mpfr_clear(f);
  return r;
}
Int mpfr_ceil_to_int(const mpfr_t& x) {
  mpfr_t f;
  mpfr_init2(f, mpfr_get_prec(x));
  mpfr_rint_ceil(f, x, MPFR_RNDU);
  Int r;
  mpfr_get_z(r.get_mpz_t(), f, MPFR_RNDN);
  mpfr_clear(f);
  return r;
}
}  // namespace

Int Real::floor_lower() const { return mpfr_floor_to_int(lo_); }
Int Real::floor_upper() const { return mpfr_floor_to_int(hi_); }
Int Real::ceil_lower() const { return mpfr_ceil_to_int(lo_); }
Int Real::ceil_upper() const { return mpfr_ceil_to_int(hi_); }

Int Real::floor_certified() const {
  Int a = floor_lower(), b = floor_upper();
  if (a != b) throw PrecisionExhausted("floor not certified at current precision");
  return a;
}

Int Real::ceil_certified() const {
  Int a = ceil_lower(), b = ceil_upper();
  if (a != b) throw PrecisionExhausted("ceil not certified at current precision");
  return a;
}

Int Real::nearest_int() const {
  mpfr_t mid, r;
  mpfr_init2(mid, prec_);
  mpfr_init2(r, prec_);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  mpfr_rint(r, mid, MPFR_RNDN);
  Int n;
  mpfr_get_z(n.get_mpz_t(), r, MPFR_RNDN);
  mpfr_clear(mid);
  mpfr_clear(r);
  return n;
}

Real Real::dist_nearest_int() const {
  Int n = nearest_int();
  Real d = (*this - from_int(n, prec_)).abs();
  Real half = from_ratio(1, 2, prec_);
  // ||x|| is at most 1/2; if the offset from the midpoint's nearest integer
  // exceeds 1/2 the interval straddles a half-integer, so fall back to [0, 1/2]
  Real r(prec_);
  if (mpfr_cmp(d.hi(), half.lo()) > 0) {
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_set(r.hi_mut(), half.hi(), MPFR_RNDU);
    return r;
  }
  return d;
}

double Real::approx() const {
  double a = mpfr_get_d(lo_, MPFR_RNDN);
  double b = mpfr_get_d(hi_, MPFR_RNDN);
  return (a + b) / 2.0;
}

std::string Real::str(size_t digits) const {
  char buf[256];
  mpfr_t mid;
  mpfr_init2(mid, prec_);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  mpfr_snprintf(buf, sizeof(buf), "%.*Rg", static_cast<int>(digits), mid);
  mpfr_clear(mid);
  return std::string(buf);
}

Real operator*(long a, const Real& b) { return Real::from_long(a, b.precision()) * b; }
Real operator+(long a, const Real& b) { return Real::from_long(a, b.precision()) + b; }

Real surd_combo(const Int& u, const Int& X, const Int& v, const Int& Y,
                long prec) {
  Real su = Real::from_int(u, prec);
  Real sv = Real::from_int(v, prec);
  Real rx = Real::from_int(X, prec).sqrt();
  Real ry = Real::from_int(Y, prec).sqrt();
  if ((u >= 0) == (v >= 0) || u == 0 || v == 0) {
    return su * rx + sv * ry;
  }
  // mixed signs: (u^2 X - v^2 Y) / (u sqrt X - v sqrt Y), denominator same-signed
  Int num = u * u * X - v * v * Y;
  Real den = su * rx - sv * ry;
  return Real::from_int(num, prec) / den;
}

CFCursor::CFCursor(Real target)
    : rem_(std::move(target)), pm1_(1), qm1_(0), p_(0), q_(0) {}

void CFCursor::advance() {
  if (exhausted_) {
    throw PrecisionExhausted("continued fraction remainder not certified positive");
  }
  Int a = rem_.floor_certified();
  if (!started_) {
    p_ = a;
    q_ = 1;
    started_ = true;
  } else {
    Int pn = a * p_ + pm1_;
    Int qn = a * q_ + qm1_;
    pm1_ = p_;
    qm1_ = q_;
    p_ = pn;
    q_ = qn;
  }
  quotients_.push_back(a);
  consumed_current_ = false;
  Real frac = rem_ - Real::from_int(a, rem_.precision());
  if (!frac.certainly_positive()) {
    // rational at working precision, or out of certified bits; the quotient
    // just emitted is still valid, only the next one is unavailable
    exhausted_ = true;
    return;
  }
  rem_ = Real::from_long(1, rem_.precision()) / frac;
}

std::pair<Int, Int> CFCursor::next_convergent(const Int& q_min) {
  while (true) {
    if (!consumed_current_ && q_ > q_min) {
      consumed_current_ = true;
      return {p_, q_};
    }
    advance();
  }
}

}  // namespace exact
}  // namespace d4quad
