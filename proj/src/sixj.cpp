#include "skeinrep/sixj.hpp"

#include <algorithm>
#include <shared_mutex>
#include <sstream>

#include "skeinrep/errors.hpp"

namespace skeinrep {

bool ColorTriple::admissible() const {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return c <= a + b && a <= b + c && b <= a + c;
}

std::array<ColorTriple, 4> SixTuple::triples() const {
  return {ColorTriple{a, b, c}, ColorTriple{c, d, e}, ColorTriple{a, e, f}, ColorTriple{b, d, f}};
}

bool SixTuple::admissible() const {
  for (const auto& t : triples())
    if (!t.admissible()) return false;
  return true;
}

bool SixTuple::r_admissible(int r) const {
  for (const auto& t : triples())
    if (!t.r_admissible(r)) return false;
  return true;
}

std::array<int, 4> SixTuple::triangles() const {
  return {(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2};
}

std::array<int, 3> SixTuple::squares() const {
  return {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
}

std::array<int, 3> SixTuple::opposite_sums() const {
  std::array<int, 3> s{a + d, b + e, c + f};
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

int SixTuple::max_triple_sum() const {
  int m = 0;
  for (const auto& t : triples()) m = std::max(m, t.sum());
  return m;
}

std::string SixTuple::to_string() const {
  std::ostringstream os;
  os << "{" << a << " " << b << " " << c << "; " << d << " " << e << " " << f << "}";
  return os.str();
}

LaurentPoly circle_eval(int a) {
  LaurentPoly p = quantum_integer(a + 1);
  return (a % 2) ? -p : p;
}

std::set<int> pole_set_for_sum(int M, int max_r) {
  std::set<int> out;
  for (int r = 2; r <= max_r; ++r)
    if (2 * (r - 2) < M) out.insert(r);
  return out;
}

std::set<int> pole_set(const SixTuple& s, int max_r) { return pole_set_for_sum(s.max_triple_sum(), max_r); }

const LaurentPoly& tetra_zsum(const SixTuple& s) {
  static std::shared_mutex mu;
  static std::map<SixTuple, LaurentPoly> memo;
  {
    std::shared_lock lock(mu);
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
  }
  const auto tri = s.triangles();
  const auto sq = s.squares();
  const int lo = *std::max_element(tri.begin(), tri.end());
  const int hi = *std::min_element(sq.begin(), sq.end());
  LaurentPoly sum;
  for (int z = lo; z <= hi; ++z) {
    std::vector<int> parts;
    for (int t : tri) parts.push_back(z - t);
    for (int q : sq) parts.push_back(q - z);
    LaurentPoly term = quantum_integer(z + 1) * quantum_multinomial(z, parts);
    if (z % 2) term = -term;
    sum += term;
  }
  std::unique_lock lock(mu);
  return memo.emplace(s, std::move(sum)).first->second;
}

mpq_class summand_exponent(const SixTuple& s, int z) {
  const long L = s.a + s.b + s.c + s.d + s.e + s.f;
  const long cross = static_cast<long>(s.a) * s.b + s.a * s.c + s.a * s.e + s.a * s.f + s.b * s.c +
                     s.b * s.d + s.b * s.f + s.c * s.d + s.c * s.e + s.d * s.e + s.d * s.f + s.e * s.f;
  mpq_class zq(z), constant(L * L + cross, 8);
  constant.canonicalize();
  return mpq_class(3, 2) * zq * zq - (mpq_class(L) + mpq_class(1, 2)) * zq + constant;
}

int q_exponent(const SixTuple& s) {
  auto C = s.opposite_sums();
  return (C[0] - C[1]) * (C[0] - C[2]) / 2 + C[0] - s.c - s.f;
}

// ---------------------------------------------------------------------------

SixjEvaluator::SixjEvaluator(QPoint point) : point_(std::move(point)) {
  qint_.push_back(PrecComplex(digits()));
  fact_.push_back(one());
}

SixjEvaluator::SixjEvaluator(const PrecComplex& A) : SixjEvaluator(QPoint::numeric(A)) {}

void SixjEvaluator::check_triple(const ColorTriple& t) const {
  if (!t.admissible())
    throw AdmissibilityError("triple (" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                             std::to_string(t.c) + ") is not admissible");
  if (point_.level && t.sum() > 2 * (*point_.level - 2))
    throw PoleError("theta(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                        std::to_string(t.c) + ") has a pole or zero at level " +
                        std::to_string(*point_.level),
                    pole_set_for_sum(t.sum(), t.sum() / 2 + 2));
}

void SixjEvaluator::check_tuple(const SixTuple& s) const {
  for (const auto& t : s.triples())
    if (!t.admissible()) throw AdmissibilityError("six-tuple " + s.to_string() + " is not admissible");
  const int M = s.max_triple_sum();
  if (point_.level && M > 2 * (*point_.level - 2))
    throw PoleError("six-tuple " + s.to_string() + " has a pole at level " +
                        std::to_string(*point_.level),
                    pole_set_for_sum(M, M / 2 + 2));
}

PrecComplex SixjEvaluator::quantum_integer(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(qint_.size()) <= n)
    qint_.push_back(eval(skeinrep::quantum_integer(static_cast<int>(qint_.size())), A()));
  return qint_[static_cast<size_t>(n)];
}

PrecComplex SixjEvaluator::factorial(int n) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(fact_.size()) > n) return fact_[static_cast<size_t>(n)];
  }
  quantum_integer(n);
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(fact_.size()) <= n) fact_.push_back(fact_.back() * qint_[fact_.size()]);
  return fact_[static_cast<size_t>(n)];
}

PrecComplex SixjEvaluator::circle(int a) {
  PrecComplex q = quantum_integer(a + 1);
  return (a % 2) ? -q : q;
}

PrecComplex SixjEvaluator::theta(const ColorTriple& t) {
  check_triple(t);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = theta_.find(t);
    if (it != theta_.end()) return it->second;
  }
  const int s = t.sum() / 2;
  PrecComplex v = factorial(s + 1) * factorial(s - t.a) * factorial(s - t.b) * factorial(s - t.c) /
                  (factorial(t.a) * factorial(t.b) * factorial(t.c));
  if (s % 2) v = -v;
  std::lock_guard<std::mutex> lock(mu_);
  theta_.emplace(t, v);
  return v;
}

PrecComplex SixjEvaluator::tetra(const SixTuple& s) {
  check_tuple(s);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tetra_.find(s);
    if (it != tetra_.end()) return it->second;
  }
  if (A().is_zero()) {
    if (s == SixTuple{}) return one();
    throw DomainError("tetrahedron evaluation has a pole at A = 0");
  }
  const auto tri = s.triangles();
  const auto sq = s.squares();
  PrecComplex num = one();
  for (int q : sq)
    for (int t : tri) num *= factorial(q - t);
  PrecComplex den = factorial(s.a) * factorial(s.b) * factorial(s.c) * factorial(s.d) *
                    factorial(s.e) * factorial(s.f);
  PrecComplex v = num / den * eval(tetra_zsum(s), A());
  std::lock_guard<std::mutex> lock(mu_);
  tetra_.emplace(s, v);
  return v;
}

PrecComplex SixjEvaluator::quantum_6j(const SixTuple& s) {
  check_tuple(s);
  if (A().is_zero()) throw DomainError("quantum 6j-symbol is not defined at A = 0");
  return tetra(s) * circle(s.c) / (theta({s.a, s.e, s.f}) * theta({s.d, s.b, s.f}));
}

PrecComplex SixjEvaluator::recoupling(const SixTuple& s) {
  check_tuple(s);
  if (A().is_zero()) throw DomainError("recoupling coefficient is not defined at A = 0");
  return tetra(s) * circle(s.c) / (theta({s.a, s.b, s.c}) * theta({s.d, s.e, s.c}));
}

PrecComplex SixjEvaluator::principal_root(const PrecComplex& p, const char* what) const {
  Real tol = pow10(-(digits() / 2), p.bits());
  if (p.re().sign() < 0 && abs(p.im()) <= tol * p.abs())
    throw BranchError(std::string(what) + ": normalized value lies on the branch cut");
  return p.sqrt();
}

PrecComplex SixjEvaluator::sqrt_circle(int a) {
  if (a < 0) throw AdmissibilityError("negative color");
  if (a == 0) return one();
  if (point_.level && a > *point_.level - 2)
    throw PoleError("circle_" + std::to_string(a) + " vanishes or is excluded at level " +
                        std::to_string(*point_.level),
                    pole_set_for_sum(2 * a, a + 2));
  if (A().is_zero()) throw DomainError("sqrt_circle has a pole at A = 0");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sqrt_circle_.find(a);
    if (it != sqrt_circle_.end()) return it->second;
  }
  // p = A^{2a} [a+1] = 1 + A^4 + ... + A^{4a}
  PrecComplex p = A().pow(2L * a) * quantum_integer(a + 1);
  PrecComplex v = (principal_root(p, "sqrt_circle") / A().pow(a)).mul_i(a);
  std::lock_guard<std::mutex> lock(mu_);
  sqrt_circle_.emplace(a, v);
  return v;
}

PrecComplex SixjEvaluator::sqrt_theta(const ColorTriple& t) {
  check_triple(t);
  const int s = t.sum() / 2;
  if (s == 0) return one();
  if (A().is_zero()) throw DomainError("sqrt_theta has a pole at A = 0");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sqrt_theta_.find(t);
    if (it != sqrt_theta_.end()) return it->second;
  }
  PrecComplex q = A().pow(2L * s) * theta(t);
  if (s % 2) q = -q;
  PrecComplex v = (principal_root(q, "sqrt_theta") / A().pow(s)).mul_i(s);
  std::lock_guard<std::mutex> lock(mu_);
  sqrt_theta_.emplace(t, v);
  return v;
}

PrecComplex SixjEvaluator::renormalized_6j(const SixTuple& s) {
  check_tuple(s);
  if (A().is_zero()) {
    const int m = std::max(s.a + s.d, s.b + s.e);
    return PrecComplex((s.c + s.f == m) ? 1 : 0, digits());
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = renorm_.find(s);
    if (it != renorm_.end()) return it->second;
  }
  PrecComplex v = tetra(s) * sqrt_circle(s.c) * sqrt_circle(s.f) /
                  (sqrt_theta({s.a, s.b, s.c}) * sqrt_theta({s.a, s.e, s.f}) *
                   sqrt_theta({s.d, s.b, s.f}) * sqrt_theta({s.d, s.e, s.c}));
  std::lock_guard<std::mutex> lock(mu_);
  renorm_.emplace(s, v);
  return v;
}

PrecComplex SixjEvaluator::unitary_6j(const SixTuple& s) {
  check_tuple(s);
  if (A().is_zero()) return PrecComplex(s == SixTuple{} ? 1 : 0, digits());
  return tetra(s) / (sqrt_theta({s.a, s.b, s.c}) * sqrt_theta({s.a, s.e, s.f}) *
                     sqrt_theta({s.d, s.b, s.f}) * sqrt_theta({s.d, s.e, s.c}));
}

// ---------------------------------------------------------------------------

namespace {

QPoint point_for(const PrecComplex& A, int M) { return QPoint::numeric(A, M / 2 + 2); }

}  // namespace

PrecComplex theta_eval(const ColorTriple& t, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, t.sum()));
  return ev.theta(t);
}

PrecComplex tetra_eval(const SixTuple& s, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, s.max_triple_sum()));
  return ev.tetra(s);
}

PrecComplex quantum_6j(const SixTuple& s, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, s.max_triple_sum()));
  return ev.quantum_6j(s);
}

PrecComplex sqrt_circle(int a, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, 2 * a));
  return ev.sqrt_circle(a);
}

PrecComplex sqrt_theta(const ColorTriple& t, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, t.sum()));
  return ev.sqrt_theta(t);
}

PrecComplex renormalized_6j(const SixTuple& s, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, s.max_triple_sum()));
  return ev.renormalized_6j(s);
}

PrecComplex unitary_6j(const SixTuple& s, const PrecComplex& A) {
  SixjEvaluator ev(point_for(A, s.max_triple_sum()));
  return ev.unitary_6j(s);
}

Real effective_constant(const PrecComplex& A) {
  const mpfr_prec_t bits = A.bits();
  Real one(1L, bits);
  if (A.abs() >= one) throw DomainError("effective constant needs |A| < 1");
  PrecComplex t = A.pow(4);
  EulerBounds eb = euler_bounds(t);
  Real tau = t.abs();
  return pow(eb.K2, 19) / pow(eb.K1, 22) * pow(one + tau, 3) / pow(one - tau, 2);
}

Real estimate_bound(const SixTuple& s, const PrecComplex& A, const Real& K) {
  const mpfr_prec_t bits = A.bits();
  if (A.abs() >= Real(1L, bits)) throw DomainError("estimate_bound needs |A| < 1");
  if (A.is_zero()) throw DomainError("estimate_bound needs A != 0");
  return pow(A.abs(), q_exponent(s)) * K;
}

Real estimate_bound(const SixTuple& s, const PrecComplex& A) {
  return estimate_bound(s, A, effective_constant(A));
}

}  // namespace skeinrep
