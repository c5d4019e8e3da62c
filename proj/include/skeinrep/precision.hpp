#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <string>

namespace skeinrep {

/// Binary precision used to carry a budget of `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// RAII handle around an mpfr_t.  Binary operations round to the smaller
/// precision of the two operands.
class Real {
 public:
  Real();
  explicit Real(mpfr_prec_t bits);
  Real(long v, mpfr_prec_t bits);
  Real(double v, mpfr_prec_t bits);
  Real(const mpz_class& v, mpfr_prec_t bits);
  Real(const mpq_class& v, mpfr_prec_t bits);
  Real(const std::string& decimal, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Exact rational value of the binary float.
  mpq_class to_rational() const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real pi(mpfr_prec_t bits);
/// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t bits);

/// Complex number with an explicit decimal digit budget (at least 10).
class PrecComplex {
 public:
  static constexpr int kDefaultDigits = 40;

  PrecComplex() : PrecComplex(kDefaultDigits) {}
  explicit PrecComplex(int digits);
  PrecComplex(long re, int digits);
  PrecComplex(const Real& re, const Real& im, int digits);

  static PrecComplex from_double(double re, double im, int digits = kDefaultDigits);
  static PrecComplex from_decimal(const std::string& re, const std::string& im,
                                  int digits = kDefaultDigits);
  static PrecComplex from_rational(const mpq_class& re, const mpq_class& im,
                                   int digits = kDefaultDigits);
  /// exp(i*pi*k/two_r), built from exact angle data.
  static PrecComplex root_of_unity(long k, long two_r, int digits = kDefaultDigits);
  /// rho * exp(i*theta).
  static PrecComplex polar(const Real& rho, const Real& theta, int digits);

  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return bits_for_digits(digits_); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Real norm2() const;
  Real abs() const;
  Real arg() const;
  PrecComplex conj() const;
  /// Principal square root, cut along the negative real axis.
  PrecComplex sqrt() const;
  PrecComplex pow(long n) const;
  /// Exact multiplication by i^k.
  PrecComplex mul_i(long k) const;
  PrecComplex with_digits(int digits) const;
  std::string to_string(int digits) const;

  PrecComplex operator-() const;
  PrecComplex& operator+=(const PrecComplex& o);
  PrecComplex& operator-=(const PrecComplex& o);
  PrecComplex& operator*=(const PrecComplex& o);
  PrecComplex& operator/=(const PrecComplex& o);

  friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b);
  friend PrecComplex operator*(const PrecComplex& a, const Real& b);
  friend PrecComplex operator*(const PrecComplex& a, long b);
  friend bool operator==(const PrecComplex& a, const PrecComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_, im_;
  int digits_;
};

/// |a - b|
Real distance(const PrecComplex& a, const PrecComplex& b);

}  // namespace skeinrep
