#include "skeinrep/anosov.hpp"

#include <algorithm>
#include <map>

#include "skeinrep/errors.hpp"

namespace skeinrep {

long IncidenceMatrix::entry_sum() const {
  long s = 0;
  for (const auto& row : data)
    for (long v : row) s += v;
  return s;
}

void IncidenceMatrix::validate() const {
  if (data.empty()) throw DomainError("incidence matrix must be at least 1x1");
  for (const auto& row : data) {
    if (static_cast<int>(row.size()) != n()) throw DomainError("incidence matrix must be square");
    for (long v : row)
      if (v < 0) throw DomainError("incidence matrix entries must be nonnegative");
  }
}

std::optional<int> primitivity_exponent(const IncidenceMatrix& M) {
  M.validate();
  const int n = M.n();
  using Pattern = std::vector<std::vector<bool>>;
  Pattern base(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) base[static_cast<size_t>(i)][static_cast<size_t>(j)] = M.data[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0;
  Pattern p = base;
  const int limit = (n - 1) * (n - 1) + 1;
  for (int k = 1; k <= limit; ++k) {
    bool all = true;
    for (const auto& row : p)
      for (bool b : row) all = all && b;
    if (all) return k;
    Pattern next(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (p[static_cast<size_t>(i)][static_cast<size_t>(l)])
          for (int j = 0; j < n; ++j)
            if (base[static_cast<size_t>(l)][static_cast<size_t>(j)]) next[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    p = std::move(next);
  }
  return std::nullopt;
}

bool is_perron_frobenius(const IncidenceMatrix& M) { return primitivity_exponent(M).has_value(); }

namespace {

using RealMatrix = std::vector<std::vector<Real>>;

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b, mpfr_prec_t bits) {
  const size_t n = a.size();
  RealMatrix c(n, std::vector<Real>(n, Real(bits)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

void normalize(RealMatrix& a) {
  Real m = a[0][0];
  for (const auto& row : a)
    for (const auto& v : row) m = max(m, v);
  for (auto& row : a)
    for (auto& v : row) v /= m;
}

}  // namespace

Dilatation dilatation(const IncidenceMatrix& M, double tol, int digits) {
  if (!is_perron_frobenius(M)) throw DomainError("dilatation needs a Perron-Frobenius matrix");
  const size_t n = static_cast<size_t>(M.n());
  const mpfr_prec_t bits = bits_for_digits(digits);
  RealMatrix A(n, std::vector<Real>(n, Real(bits)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A[i][j] = Real(M.data[i][j], bits);

  // Repeated squaring drives the normalized power towards the Perron projector.
  RealMatrix P = A;
  normalize(P);
  for (int s = 0; s < 64; ++s) {
    P = multiply(P, P, bits);
    normalize(P);
  }
  std::vector<Real> v(n, Real(bits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) v[i] += P[i][j];

  auto bounds = [&](const std::vector<Real>& x, Real& lo, Real& hi, std::vector<Real>& Ax) {
    for (size_t i = 0; i < n; ++i) {
      Ax[i] = Real(bits);
      for (size_t j = 0; j < n; ++j) Ax[i] += A[i][j] * x[j];
      Real q = Ax[i] / x[i];
      if (i == 0 || q < lo) lo = q;
      if (i == 0 || q > hi) hi = q;
    }
  };
  Real lo(bits), hi(bits);
  std::vector<Real> Av(n, Real(bits));
  const Real rel_tol(tol, bits);
  for (int it = 0; it < 10000; ++it) {
    bounds(v, lo, hi, Av);
    if (hi - lo <= rel_tol * hi) break;
    Real m = Av[0];
    for (const auto& x : Av) m = max(m, x);
    for (size_t i = 0; i < n; ++i) v[i] = Av[i] / m;
  }
  const Real slack = pow10(-(digits - 5), bits);
  const Real one(1L, bits);
  Dilatation d{(lo + hi) / 2, lo * (one - slack), hi * (one + slack)};
  return d;
}

bool ham_song_check(const IncidenceMatrix& M, const Dilatation& d) {
  const long n = M.n();
  const Real rhs(M.entry_sum() - n + 1, d.lo.bits());
  const Real lo_n = pow(d.lo, n), hi_n = pow(d.hi, n);
  return lo_n >= rhs - (hi_n - lo_n);
}

bool ham_song_check(const IncidenceMatrix& M) { return ham_song_check(M, dilatation(M)); }

namespace {

mpq_class exact(double lam) {
  mpq_class q(lam);
  q.canonicalize();
  return q;
}

mpz_class floor_plus_one(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f + 1;
}

mpq_class power(const mpq_class& x, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

void check_bound_args(int chi, const mpq_class& lam) {
  if (chi >= 0) throw DomainError("Euler characteristic must be negative");
  if (lam <= 1) throw DomainError("dilatation must exceed 1");
}

}  // namespace

mpz_class level_bound(int chi, const mpq_class& lam) {
  check_bound_args(chi, lam);
  const long k = -9L * chi;
  mpq_class B = mpq_class(-6L * chi) * (power(lam, static_cast<unsigned long>(k)) + k - 1) + 1;
  return floor_plus_one(B);
}

mpz_class level_bound(int chi, double lam) { return level_bound(chi, exact(lam)); }

mpz_class punctured_level_bound(int chi_punctured, const mpq_class& lam) {
  if (chi_punctured >= 0) throw DomainError("Euler characteristic must be negative");
  if (lam < 1) throw DomainError("dilatation must be at least 1");
  const long k = -3L * chi_punctured;
  mpq_class B = (power(lam, static_cast<unsigned long>(k)) + k + 1) / 2;
  return floor_plus_one(B);
}

mpz_class punctured_level_bound(int chi_punctured, double lam) {
  return punctured_level_bound(chi_punctured, exact(lam));
}

// ---------------------------------------------------------------------------

void TrainTrack::validate() const {
  std::vector<int> seen(static_cast<size_t>(2 * branches), 0);
  for (const auto& sw : switches) {
    if (sw.large.empty() || sw.small.empty()) throw DomainError("switch sides must be nonempty");
    for (const auto* side : {&sw.large, &sw.small})
      for (int h : *side) {
        if (h < 0 || h >= 2 * branches) throw DomainError("half-branch out of range");
        ++seen[static_cast<size_t>(h)];
      }
  }
  for (int s : seen)
    if (s != 1) throw DomainError("every half-branch must lie on exactly one switch side");
}

bool TrainTrack::satisfies_switch_conditions(const std::vector<int>& weights) const {
  for (const auto& sw : switches) {
    long l = 0, s = 0;
    for (int h : sw.large) l += weights[static_cast<size_t>(h / 2)];
    for (int h : sw.small) s += weights[static_cast<size_t>(h / 2)];
    if (l != s) return false;
  }
  return true;
}

std::vector<int> carried_curve(const TrainTrack& track) {
  track.validate();
  // Where each half-branch sits: switch index and side.
  std::vector<std::pair<int, bool>> where(static_cast<size_t>(2 * track.branches));
  for (size_t k = 0; k < track.switches.size(); ++k) {
    for (int h : track.switches[k].large) where[static_cast<size_t>(h)] = {static_cast<int>(k), true};
    for (int h : track.switches[k].small) where[static_cast<size_t>(h)] = {static_cast<int>(k), false};
  }
  // State: the half-branch through which we leave a switch.
  std::map<int, int> first_visit;
  std::vector<int> trail;
  int h = 0;
  while (!first_visit.count(h)) {
    first_visit[h] = static_cast<int>(trail.size());
    trail.push_back(h);
    const int arrive = h ^ 1;
    auto [sw, large] = where[static_cast<size_t>(arrive)];
    const auto& exits = large ? track.switches[static_cast<size_t>(sw)].small : track.switches[static_cast<size_t>(sw)].large;
    h = exits.front();
  }
  std::vector<int> weights(static_cast<size_t>(track.branches), 0);
  for (size_t k = static_cast<size_t>(first_visit[h]); k < trail.size(); ++k) ++weights[static_cast<size_t>(trail[k] / 2)];
  return weights;
}

TrainTrack single_loop_track() { return TrainTrack{1, {{{0}, {1}}}}; }

TrainTrack torus_track() {
  // Branches x=0, y=1, z=2 run from switch u to switch v.
  return TrainTrack{3, {{{0}, {2, 4}}, {{5}, {1, 3}}}};
}

TrainTrack torus_two_loop_track() { return TrainTrack{2, {{{0, 2}, {1, 3}}}}; }

}  // namespace skeinrep
