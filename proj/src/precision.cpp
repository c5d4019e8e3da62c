#include "skeinrep/precision.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "skeinrep/errors.hpp"

namespace skeinrep {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

namespace {

mpfr_prec_t min_bits(const Real& a, const Real& b) { return std::min(a.bits(), b.bits()); }

template <class F>
Real unary(const Real& x, F f) {
  Real out(x.bits());
  f(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real::Real() : Real(bits_for_digits(PrecComplex::kDefaultDigits)) {}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(double v, mpfr_prec_t bits) : Real(bits) { mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(const mpz_class& v, mpfr_prec_t bits) : Real(bits) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }
Real::Real(const mpq_class& v, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }

Real::Real(const std::string& decimal, mpfr_prec_t bits) : Real(bits) {
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("not a decimal number: '" + decimal + "'");
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(0, digits - 1), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpq_class Real::to_rational() const {
  if (!mpfr_number_p(v_)) throw DomainError("non-finite value has no rational form");
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), mpz_class(1).get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q *= p;
  } else {
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), mpz_class(1).get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q /= p;
  }
  q.canonicalize();
  return q;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
  Real out(min_bits(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
Real operator-(const Real& a, const Real& b) {
  Real out(min_bits(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
Real operator*(const Real& a, const Real& b) {
  Real out(min_bits(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  Real out(min_bits(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}
Real operator*(const Real& a, long b) {
  Real out(a.bits());
  mpfr_mul_si(out.v_, a.v_, b, MPFR_RNDN);
  return out;
}
Real operator/(const Real& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Real out(a.bits());
  mpfr_div_si(out.v_, a.v_, b, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }

Real atan2(const Real& y, const Real& x) {
  Real out(min_bits(x, y));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(min_bits(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long n) {
  Real out(x.bits());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real pow(const Real& x, const Real& y) {
  Real out(min_bits(x, y));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }
Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }

Real pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real pow10(long e, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int checked_digits(int digits) {
  if (digits < 10) throw DomainError("digit budget must be at least 10");
  return digits;
}

}  // namespace

PrecComplex::PrecComplex(int digits)
    : re_(bits_for_digits(checked_digits(digits))), im_(bits_for_digits(digits)), digits_(digits) {}

PrecComplex::PrecComplex(long re, int digits) : PrecComplex(digits) {
  re_ = Real(re, bits());
}

PrecComplex::PrecComplex(const Real& re, const Real& im, int digits) : PrecComplex(digits) {
  mpfr_set(re_.get(), re.get(), MPFR_RNDN);
  mpfr_set(im_.get(), im.get(), MPFR_RNDN);
}

PrecComplex PrecComplex::from_double(double re, double im, int digits) {
  PrecComplex z(digits);
  z.re_ = Real(re, z.bits());
  z.im_ = Real(im, z.bits());
  return z;
}

PrecComplex PrecComplex::from_decimal(const std::string& re, const std::string& im, int digits) {
  PrecComplex z(digits);
  z.re_ = Real(re, z.bits());
  z.im_ = Real(im, z.bits());
  return z;
}

PrecComplex PrecComplex::from_rational(const mpq_class& re, const mpq_class& im, int digits) {
  PrecComplex z(digits);
  z.re_ = Real(re, z.bits());
  z.im_ = Real(im, z.bits());
  return z;
}

PrecComplex PrecComplex::root_of_unity(long k, long two_r, int digits) {
  if (two_r <= 0) throw DomainError("root of unity needs a positive denominator");
  PrecComplex z(digits);
  long m = ((k % (2 * two_r)) + 2 * two_r) % (2 * two_r);
  // Exact values at multiples of pi/2 keep axis points free of rounding.
  if ((2 * m) % two_r == 0) {
    long quarter = (2 * m) / two_r;
    static const long c[4] = {1, 0, -1, 0};
    static const long s[4] = {0, 1, 0, -1};
    z.re_ = Real(c[quarter], z.bits());
    z.im_ = Real(s[quarter], z.bits());
    return z;
  }
  mpfr_prec_t work = z.bits() + 32;
  Real angle = pi(work) * m / two_r;
  z.re_ = Real(z.bits());
  z.im_ = Real(z.bits());
  mpfr_set(z.re_.get(), cos(angle).get(), MPFR_RNDN);
  mpfr_set(z.im_.get(), sin(angle).get(), MPFR_RNDN);
  return z;
}

PrecComplex PrecComplex::polar(const Real& rho, const Real& theta, int digits) {
  PrecComplex z(digits);
  Real c = cos(theta), s = sin(theta);
  mpfr_mul(z.re_.get(), rho.get(), c.get(), MPFR_RNDN);
  mpfr_mul(z.im_.get(), rho.get(), s.get(), MPFR_RNDN);
  return z;
}

Real PrecComplex::norm2() const { return re_ * re_ + im_ * im_; }
Real PrecComplex::abs() const { return hypot(re_, im_); }
Real PrecComplex::arg() const { return atan2(im_, re_); }

PrecComplex PrecComplex::conj() const {
  PrecComplex z(*this);
  z.im_ = -im_;
  return z;
}

PrecComplex PrecComplex::sqrt() const {
  PrecComplex z(digits_);
  if (is_zero()) return z;
  Real r = abs();
  Real u = skeinrep::sqrt((r + skeinrep::abs(re_)) / 2);
  if (re_.sign() >= 0) {
    z.re_ = u;
    z.im_ = im_ / (u * 2);
  } else {
    z.re_ = skeinrep::abs(im_) / (u * 2);
    z.im_ = im_.sign() < 0 ? -u : u;
  }
  return z;
}

PrecComplex PrecComplex::pow(long n) const {
  if (n < 0) return PrecComplex(1, digits_) / pow(-n);
  PrecComplex result(1, digits_), base(*this);
  unsigned long e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

PrecComplex PrecComplex::mul_i(long k) const {
  long q = ((k % 4) + 4) % 4;
  PrecComplex z(digits_);
  switch (q) {
    case 0: z.re_ = re_; z.im_ = im_; break;
    case 1: z.re_ = -im_; z.im_ = re_; break;
    case 2: z.re_ = -re_; z.im_ = -im_; break;
    default: z.re_ = im_; z.im_ = -re_; break;
  }
  return z;
}

PrecComplex PrecComplex::with_digits(int digits) const { return PrecComplex(re_, im_, digits); }

std::string PrecComplex::to_string(int digits) const {
  return "(" + re_.to_string(digits) + ", " + im_.to_string(digits) + ")";
}

PrecComplex PrecComplex::operator-() const {
  PrecComplex z(*this);
  z.re_ = -re_;
  z.im_ = -im_;
  return z;
}

PrecComplex& PrecComplex::operator+=(const PrecComplex& o) { return *this = *this + o; }
PrecComplex& PrecComplex::operator-=(const PrecComplex& o) { return *this = *this - o; }
PrecComplex& PrecComplex::operator*=(const PrecComplex& o) { return *this = *this * o; }
PrecComplex& PrecComplex::operator/=(const PrecComplex& o) { return *this = *this / o; }

PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) {
  PrecComplex z(std::min(a.digits_, b.digits_));
  mpfr_add(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(z.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  return z;
}

PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) {
  PrecComplex z(std::min(a.digits_, b.digits_));
  mpfr_sub(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_sub(z.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  return z;
}

PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
  PrecComplex z(std::min(a.digits_, b.digits_));
  Real t(z.bits());
  // Exact zeros stay exact, which keeps axis values strictly real or imaginary.
  mpfr_mul(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_sub(z.re_.get(), z.re_.get(), t.get(), MPFR_RNDN);
  mpfr_mul(z.im_.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(z.im_.get(), z.im_.get(), t.get(), MPFR_RNDN);
  return z;
}

PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
  if (b.is_zero()) throw DomainError("complex division by zero");
  PrecComplex z(std::min(a.digits_, b.digits_));
  mpfr_prec_t w = z.bits() + 8;
  Real d(w), t(w), u(w);
  mpfr_mul(d.get(), b.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(t.get(), b.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(d.get(), d.get(), t.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(u.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDN);
  mpfr_div(z.re_.get(), t.get(), d.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(u.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_sub(t.get(), t.get(), u.get(), MPFR_RNDN);
  mpfr_div(z.im_.get(), t.get(), d.get(), MPFR_RNDN);
  return z;
}

PrecComplex operator*(const PrecComplex& a, const Real& b) {
  PrecComplex z(a.digits_);
  mpfr_mul(z.re_.get(), a.re_.get(), b.get(), MPFR_RNDN);
  mpfr_mul(z.im_.get(), a.im_.get(), b.get(), MPFR_RNDN);
  return z;
}

PrecComplex operator*(const PrecComplex& a, long b) {
  PrecComplex z(a.digits_);
  mpfr_mul_si(z.re_.get(), a.re_.get(), b, MPFR_RNDN);
  mpfr_mul_si(z.im_.get(), a.im_.get(), b, MPFR_RNDN);
  return z;
}

Real distance(const PrecComplex& a, const PrecComplex& b) { return (a - b).abs(); }

}  // namespace skeinrep
