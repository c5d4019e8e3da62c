#include "skeinrep/qlaurent.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "skeinrep/errors.hpp"

namespace skeinrep {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) c_[0] = constant;
}

LaurentPoly::LaurentPoly(const mpq_class& constant) {
  if (constant != 0) c_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const mpq_class& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exponent] = coeff;
  return p;
}

void LaurentPoly::add_term(int e, const mpq_class& v) {
  if (v == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, v);
    return;
  }
  it->second += v;
  if (it->second == 0) c_.erase(it);
}

mpq_class LaurentPoly::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? mpq_class(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (c_.empty()) throw DomainError("zero polynomial has no exponents");
  return c_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (c_.empty()) throw DomainError("zero polynomial has no exponents");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, v] : c_) p.c_.emplace_hint(p.c_.end(), e + k, v);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1L), base(*this);
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return LaurentPoly();
  const int n0 = min_exponent(), d0 = d.min_exponent();
  std::vector<mpq_class> num(static_cast<size_t>(max_exponent() - n0 + 1));
  std::vector<mpq_class> den(static_cast<size_t>(d.max_exponent() - d0 + 1));
  for (const auto& [e, v] : c_) num[static_cast<size_t>(e - n0)] = v;
  for (const auto& [e, v] : d.c_) den[static_cast<size_t>(e - d0)] = v;
  if (num.size() < den.size()) return std::nullopt;
  std::vector<mpq_class> quot(num.size() - den.size() + 1);
  for (size_t k = quot.size(); k-- > 0;) {
    mpq_class q = num[k + den.size() - 1] / den.back();
    quot[k] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
  }
  for (const auto& v : num)
    if (v != 0) return std::nullopt;
  LaurentPoly out;
  for (size_t k = 0; k < quot.size(); ++k)
    if (quot[k] != 0) out.c_.emplace(static_cast<int>(k) + n0 - d0, quot[k]);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v.get_str();
    if (e != 0) os << "*A^" << e;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, v] : p.c_) v = -v;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, v);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, -v);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) p.add_term(ea + eb, va * vb);
  return p;
}

PrecComplex eval(const LaurentPoly& p, const PrecComplex& A) {
  const int digits = A.digits();
  if (p.is_zero()) return PrecComplex(digits);
  if (A.is_zero()) {
    if (p.min_exponent() < 0) throw DomainError("negative exponent evaluated at A = 0");
    return PrecComplex::from_rational(p.coeff(0), 0, digits);
  }
  const auto& c = p.coeffs();
  const mpfr_prec_t bits = A.bits();
  auto it = c.rbegin();
  PrecComplex acc(Real(it->second, bits), Real(bits), digits);
  int prev = it->first;
  int cached_gap = 0;
  PrecComplex gap_power(digits);
  for (++it; it != c.rend(); ++it) {
    int gap = prev - it->first;
    if (gap != cached_gap) {
      gap_power = A.pow(gap);
      cached_gap = gap;
    }
    acc *= gap_power;
    acc += PrecComplex(Real(it->second, bits), Real(bits), digits);
    prev = it->first;
  }
  if (prev != 0) acc *= A.pow(prev);
  return acc;
}

LaurentPoly quantum_integer(int n) {
  if (n < 0) throw DomainError("quantum integer of a negative number");
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(1, -2 * n + 2 + 4 * k);
  return p;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw DomainError("quantum factorial of a negative number");
  LaurentPoly p(1L);
  for (int k = 2; k <= n; ++k) p *= quantum_integer(k);
  return p;
}

namespace {

using IntPoly = std::vector<mpz_class>;

// Gaussian binomial coefficients in t, built with the q-Pascal rule.
const IntPoly& gaussian_binomial(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, IntPoly> memo;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<std::pair<int, int>> todo{{n, k}};
  while (!todo.empty()) {
    auto [m, j] = todo.back();
    if (memo.count({m, j})) {
      todo.pop_back();
      continue;
    }
    if (j == 0 || j == m) {
      memo[{m, j}] = IntPoly{1};
      todo.pop_back();
      continue;
    }
    auto a = memo.find({m - 1, j - 1});
    auto b = memo.find({m - 1, j});
    if (a == memo.end()) { todo.emplace_back(m - 1, j - 1); continue; }
    if (b == memo.end()) { todo.emplace_back(m - 1, j); continue; }
    IntPoly out(static_cast<size_t>(j * (m - j) + 1));
    for (size_t i = 0; i < a->second.size(); ++i) out[i] += a->second[i];
    for (size_t i = 0; i < b->second.size(); ++i) out[i + static_cast<size_t>(j)] += b->second[i];
    memo[{m, j}] = std::move(out);
    todo.pop_back();
  }
  return memo.at({n, k});
}

void check_parts(int n, const std::vector<int>& parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("multinomial part is negative");
    sum += p;
  }
  if (sum != n) throw DomainError("multinomial parts do not sum to n");
}

}  // namespace

LaurentPoly quantum_multinomial(int n, const std::vector<int>& parts) {
  check_parts(n, parts);
  // [n]! = A^{-n(n-1)} (n)_t!, with t = A^4.
  IntPoly acc{1};
  int running = 0;
  long shift = -static_cast<long>(n) * (n - 1);
  for (int p : parts) {
    running += p;
    shift += static_cast<long>(p) * (p - 1);
    const IntPoly& g = gaussian_binomial(running, p);
    IntPoly next(acc.size() + g.size() - 1);
    for (size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0)
        for (size_t j = 0; j < g.size(); ++j) next[i + j] += acc[i] * g[j];
    acc = std::move(next);
  }
  LaurentPoly out;
  for (size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out += LaurentPoly::monomial(mpq_class(acc[i]), static_cast<int>(shift) + 4 * static_cast<int>(i));
  return out;
}

PrecComplex quantum_multinomial(int n, const std::vector<int>& parts, const PrecComplex& A) {
  check_parts(n, parts);
  std::vector<PrecComplex> fact{PrecComplex(1, A.digits())};
  for (int k = 1; k <= n; ++k) fact.push_back(fact.back() * eval(quantum_integer(k), A));
  PrecComplex den(1, A.digits());
  for (int p : parts) den *= fact[static_cast<size_t>(p)];
  return fact[static_cast<size_t>(n)] / den;
}

std::optional<RootOrder> root_order(const PrecComplex& A, int max_r) {
  const mpfr_prec_t bits = A.bits();
  Real tol = pow10(-(A.digits() / 2), bits);
  Real one(1L, bits);
  if (abs(A.abs() - one) > tol) return std::nullopt;
  PrecComplex w = A.pow(4);
  PrecComplex p = w;
  PrecComplex unit(1, A.digits());
  for (int r = 1; r <= max_r; ++r) {
    if (distance(p, unit) <= tol) return RootOrder{r};
    p *= w;
  }
  return std::nullopt;
}

int level_of_root(long k, long two_r) {
  if (two_r <= 0) throw DomainError("root of unity needs a positive denominator");
  long g = std::gcd(two_r, 2 * k);
  return static_cast<int>(two_r / g);
}

QPoint QPoint::numeric(const PrecComplex& A, int max_r) {
  QPoint q{A, std::nullopt};
  if (auto r = root_order(A, max_r); r && r->in_s()) q.level = r->r;
  return q;
}

QPoint QPoint::root(long k, long two_r, int digits) {
  QPoint q{PrecComplex::root_of_unity(k, two_r, digits), std::nullopt};
  int r = level_of_root(k, two_r);
  if (r >= 2) q.level = r;
  return q;
}

EulerBounds euler_bounds(const PrecComplex& t, int N) {
  const mpfr_prec_t bits = t.bits();
  Real tau = t.abs();
  Real one(1L, bits);
  if (tau >= one) throw DomainError("euler_bounds needs |t| < 1");
  if (N <= 0) {
    N = 64;
    if (!tau.is_zero()) {
      double l = -log10(tau).to_double();
      N = std::max(64, static_cast<int>(std::ceil(40.0 / l)));
    }
  }
  PrecComplex term = t, prod(1, t.digits());
  Real lo = one, hi = one;
  for (int i = 1; i <= N; ++i) {
    prod *= PrecComplex(1, t.digits()) - term;
    term *= t;
    Real m = prod.abs();
    lo = min(lo, m);
    hi = max(hi, m);
  }
  Real pN = prod.abs();
  Real tail_up(bits), tail_dn(bits);
  if (tau.is_zero()) {
    tail_up = one;
    tail_dn = one;
  } else {
    Real tn = pow(tau, static_cast<long>(N) + 1);
    tail_up = exp(tn / (one - tau));
    tail_dn = exp(-(tn / ((one - tau) * (one - tn))));
  }
  // Relative slack covering rounding in the partial products.
  Real slack = pow10(-(t.digits() - 8), bits);
  Real down = one - slack, up = one + slack;
  EulerBounds b{min(lo, pN * tail_dn) * down, max(hi, pN * tail_up) * up, pN * tail_dn * down,
                pN * tail_up * up, N};
  if (tau.is_zero()) b = EulerBounds{one, one, one, one, N};
  return b;
}

}  // namespace skeinrep
