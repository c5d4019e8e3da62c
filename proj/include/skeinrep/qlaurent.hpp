#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeinrep/precision.hpp"

namespace skeinrep {

/// Exact Laurent polynomial in A with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& constant);
  static LaurentPoly monomial(const mpq_class& coeff, int exponent);

  const std::map<int, mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Multiply by A^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned n) const;
  /// Quotient if `d` divides this exactly in the Laurent ring.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

 private:
  void add_term(int e, const mpq_class& v);
  std::map<int, mpq_class> c_;
};

PrecComplex eval(const LaurentPoly& p, const PrecComplex& A);

/// [n] = A^{-2n+2} + A^{-2n+6} + ... + A^{2n-2}
LaurentPoly quantum_integer(int n);
LaurentPoly quantum_factorial(int n);
/// [n]! / prod [parts_i]!, always a Laurent polynomial when the parts sum to n.
LaurentPoly quantum_multinomial(int n, const std::vector<int>& parts);
/// The same quotient formed numerically from factorial values at A.
PrecComplex quantum_multinomial(int n, const std::vector<int>& parts, const PrecComplex& A);

struct RootOrder {
  int r;
  /// Roots of unity other than +-1, +-i.
  bool in_s() const { return r >= 2; }
};

/// Smallest r <= max_r with A^{4r} = 1 up to 10^{-digits/2}.
std::optional<RootOrder> root_order(const PrecComplex& A, int max_r);
/// r(A) for A = exp(i*pi*k/two_r), computed exactly.
int level_of_root(long k, long two_r);

/// Evaluation point together with its level when it lies in S.
struct QPoint {
  PrecComplex A;
  std::optional<int> level;

  static QPoint numeric(const PrecComplex& A, int max_r = 4096);
  static QPoint root(long k, long two_r, int digits = PrecComplex::kDefaultDigits);
  int digits() const { return A.digits(); }
};

struct EulerBounds {
  Real K1;       ///< lower bound of inf_n |(t;t)_n|
  Real K2;       ///< upper bound of sup_n |(t;t)_n|
  Real tail_lo;  ///< enclosure of |(t;t)_inf|
  Real tail_hi;
  int N;
};

/// Certified bounds on the partial products of (t;t)_n for |t| < 1.
/// N <= 0 selects max(64, ceil(40 / -log10|t|)).
EulerBounds euler_bounds(const PrecComplex& t, int N = 0);

}  // namespace skeinrep
