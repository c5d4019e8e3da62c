// Desk-scale acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "skeinrep/anosov.hpp"
#include "skeinrep/errors.hpp"
#include "skeinrep/rep.hpp"

using namespace skeinrep;

namespace {

constexpr int kDigits = 40;

struct Outcome {
  double worst = 0;
  double tol = 0;
  bool ok = true;
  std::string note;

  void residual(double r) {
    if (std::isnan(r) || r > worst) worst = std::isnan(r) ? INFINITY : r;
  }
  void require(bool cond, const std::string& why) {
    if (!cond && ok) note = why;
    ok = ok && cond;
  }
  bool passed() const { return ok && worst <= tol; }
};

PrecComplex cx(double re, double im) { return PrecComplex::from_double(re, im, kDigits); }

std::vector<SixTuple> tuples(int n) {
  std::vector<SixTuple> out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c)
        for (int d = 0; d <= n; ++d)
          for (int e = 0; e <= n; ++e)
            for (int f = 0; f <= n; ++f)
              if (SixTuple s{a, b, c, d, e, f}; s.admissible()) out.push_back(s);
  return out;
}

bool adm(int a, int b, int c) { return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b; }

std::vector<PrecComplex> identity_points() {
  std::vector<PrecComplex> pts{cx(0.5, 0), cx(-0.5, 0), cx(0, 0.5)};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.05, 0.9), ang(0, 2 * M_PI);
  for (int k = 0; k < 10; ++k) {
    const double r = rad(rng), t = ang(rng);
    pts.push_back(cx(r * std::cos(t), r * std::sin(t)));
  }
  return pts;
}

// 1. Orthogonality (colors <= 6) and Biedenharn-Elliot (colors <= 4).
Outcome identities() {
  Outcome o{0, 1e-18};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& A : identity_points()) {
    SixjEvaluator ev{QPoint::numeric(A)};
    const PrecComplex one(1, kDigits);
    const int N = 6;
    for (int a = 0; a <= N; ++a)
      for (int b = 0; b <= N; ++b)
        for (int c = 0; c <= N; ++c)
          for (int d = 0; d <= N; ++d)
            for (int e = 0; e <= N; ++e) {
              if (!adm(a, b, c) || !adm(c, d, e)) continue;
              for (int g = c; g <= N; g += 2) {
                if (!adm(a, b, g) || !adm(g, d, e)) continue;
                PrecComplex sum(kDigits);
                for (int f = 0; f <= 2 * N; ++f)
                  if (adm(a, e, f) && adm(b, d, f))
                    sum += ev.renormalized_6j({a, b, c, d, e, f}) * ev.renormalized_6j({a, b, g, d, e, f});
                if (c == g) sum -= one;
                o.residual(sum.abs().to_double());
              }
            }
    const int B = 4;
    for (const auto& s1 : tuples(B))
      for (int g = 0; g <= B; ++g)
        for (int h = 0; h <= B; ++h)
          for (int i = 0; i <= B; ++i) {
            SixTuple s2{s1.b, s1.f, s1.d, h, i, g};
            if (!s2.admissible()) continue;
            PrecComplex rhs(kDigits);
            for (int l = 0; l <= 2 * B; ++l) {
              SixTuple u1{s1.c, s1.e, s1.d, h, i, l}, u2{s1.b, s1.a, s1.c, l, i, g}, u3{s1.a, g, l, h, s1.e, s1.f};
              if (u1.admissible() && u2.admissible() && u3.admissible())
                rhs += ev.renormalized_6j(u1) * ev.renormalized_6j(u2) * ev.renormalized_6j(u3);
            }
            o.residual(distance(ev.renormalized_6j(s1) * ev.renormalized_6j(s2), rhs).to_double());
          }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs <= 300, "runtime above 5 minutes");
  o.note = "13 points, " + std::to_string(static_cast<int>(secs)) + " s";
  return o;
}

// 2. |R(A) - indicator| <= 10|A| at |A| = 1e-4.
Outcome zero_limit() {
  Outcome o{0, 1.0};
  const double r = 1e-4;
  for (double t : {0.0, M_PI / 2, M_PI, 0.7, 2.9, -1.3}) {
    SixjEvaluator ev{QPoint::numeric(cx(r * std::cos(t), r * std::sin(t)))};
    for (const auto& s : tuples(6)) {
      const double ind = s.c + s.f == std::max(s.a + s.d, s.b + s.e) ? 1 : 0;
      o.residual(distance(ev.renormalized_6j(s), PrecComplex(static_cast<long>(ind), kDigits)).to_double() / (10 * r));
    }
  }
  o.note = "ratio deviation / (10|A|)";
  return o;
}

// 3. Tetrahedral symmetry and reality on the axes.
Outcome symmetry() {
  Outcome o{0, 1e-25};
  for (auto A : {cx(0.3, 0), cx(-0.6, 0), cx(0, 0.5), cx(0, -0.8), cx(0.2, 0.45)}) {
    SixjEvaluator ev{QPoint::numeric(A)};
    const bool axis = A.re().is_zero() || A.im().is_zero();
    for (const auto& s : tuples(6)) {
      PrecComplex v = ev.renormalized_6j(s);
      o.residual(distance(v, ev.renormalized_6j({s.a, s.e, s.f, s.d, s.b, s.c})).to_double());
      if (axis) o.residual(abs(v.im()).to_double());
    }
  }
  return o;
}

int q_oracle(const SixTuple& s) {
  std::array<int, 3> C{s.a + s.d, s.b + s.e, s.c + s.f};
  std::sort(C.rbegin(), C.rend());
  const int twice = (C[0] - C[1]) * (C[0] - C[2]);
  return twice / 2 + C[0] - s.c - s.f;
}

// 4. |R| <= |A|^Q K(A) and the Q-fiber bound.
Outcome estimate() {
  Outcome o{0, 1.0};
  for (double r : {0.3, 0.5, 0.7})
    for (double t : {0.0, 0.9, M_PI / 2}) {
      auto A = cx(r * std::cos(t), r * std::sin(t));
      SixjEvaluator ev{QPoint::numeric(A)};
      const Real K = effective_constant(A);
      for (const auto& s : tuples(6)) {
        o.require(q_exponent(s) == q_oracle(s), "Q exponent mismatch at " + s.to_string());
        o.residual((ev.renormalized_6j(s).abs() / estimate_bound(s, A, K)).to_double());
      }
    }
  int largest = 0;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c)
        for (int d = 0; d <= 10; ++d)
          for (int e = 0; e <= 10; ++e) {
            if (!adm(a, b, c) || !adm(c, d, e)) continue;
            std::map<int, int> fiber;
            for (int f = 0; f <= 60; ++f)
              if (adm(a, e, f) && adm(b, d, f)) largest = std::max(largest, ++fiber[q_oracle({a, b, c, d, e, f})]);
          }
  o.require(largest <= 12, "fiber of size " + std::to_string(largest));
  o.note = "ratio |R|/bound; largest Q-fiber " + std::to_string(largest);
  return o;
}

std::vector<int> id_map(int n) {
  std::vector<int> m(static_cast<size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return m;
}

std::vector<int> end_map(const Triangulation& x, const std::vector<int>& path, const Triangulation& target) {
  Triangulation y = x;
  for (int e : path) y = flip(y, e);
  for (const auto& iso : find_isomorphisms(y, target))
    if (iso.edge_map(y, target) == id_map(x.num_edges())) return id_map(x.num_edges());
  return {};
}

// 5. Different flip paths with the same endpoints give the same operator.
Outcome paths() {
  Outcome o{0, 1e-18};
  struct Case {
    Triangulation x;
    std::vector<std::vector<std::vector<int>>> groups;
  };
  std::vector<Case> cases{
      {punctured_torus(), {{{0}, {1, 1, 0}, {0, 2, 2}, {2, 2, 0, 1, 1}}, {{1, 2}, {1, 1, 1, 2}, {0, 0, 1, 2}}}},
      {four_punctured_sphere(), {{{0, 5}, {5, 0}, {0, 0, 0, 5}, {5, 3, 3, 0}}, {{}, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, {4, 4}}}}};
  const std::vector<QPoint> points{QPoint::numeric(cx(0.6, 0)), QPoint::numeric(cx(0, 0.4)), QPoint::root(1, 8, kDigits)};
  int pairs = 0;
  for (const auto& cs : cases)
    for (const auto& p : points) {
      SixjEvaluator ev{p};
      auto basis = p.level ? enumerate_r_admissible(cs.x, *p.level) : enumerate_admissible(cs.x, 3);
      for (const auto& grp : cs.groups) {
        o.require(grp.size() >= 3, "fewer than three paths");
        Triangulation target = cs.x;
        for (int e : grp.front()) target = flip(target, e);
        for (const auto& path : grp) o.require(!end_map(cs.x, path, target).empty(), "paths end apart");
        for (const auto& c : basis) {
          SparseVec ref = cocycle_apply(basis_vector(c, kDigits), cs.x, grp.front(), ev);
          for (size_t k = 1; k < grp.size(); ++k)
            o.residual(max_difference(ref, cocycle_apply(basis_vector(c, kDigits), cs.x, grp[k], ev)).to_double());
        }
        ++pairs;
      }
      if (cs.x.num_edges() == 6) {
        // Pentagon on edges 0 and 1: five flips return with the two labels exchanged.
        const std::vector<int> pent{0, 1, 0, 1, 0};
        Triangulation y = cs.x;
        for (int e : pent) y = flip(y, e);
        std::vector<int> swap{1, 0, 2, 3, 4, 5};
        bool closes = false;
        for (const auto& iso : find_isomorphisms(y, cs.x)) closes = closes || iso.edge_map(y, cs.x) == swap;
        o.require(closes, "pentagon does not close");
        for (const auto& c : basis) {
          SparseVec v = cocycle_apply(basis_vector(c, kDigits), cs.x, pent, ev), moved;
          for (const auto& [k, val] : v) moved.emplace(relabel_coloring(k, swap), val);
          o.residual(max_difference(moved, basis_vector(c, kDigits)).to_double());
        }
      }
    }
  o.note = std::to_string(pairs) + " endpoint pairs plus pentagon";
  return o;
}

// 6. Unitarity at +-exp(i pi / 2r) and block orthogonality on the axes.
Outcome unitarity() {
  Outcome o{0, 1e-18};
  auto torus = punctured_torus();
  auto sphere = four_punctured_sphere();
  auto twist = torus_twist(0);
  auto stwist = sphere_twist(sphere_curves()[0]);
  for (int r = 2; r <= 6; ++r)
    for (long k : {1L, 2L * r + 1}) {
      QPoint p = QPoint::root(k, 2 * r, kDigits);
      for (int e = 0; e < 3; ++e) o.residual(unitarity_residual(flip_matrix(torus, e, r, p)).to_double());
      for (int e = 0; e < 6; ++e) o.residual(unitarity_residual(flip_matrix(sphere, e, r, p)).to_double());
      o.residual(unitarity_residual(assemble_matrix(twist, r, p)).to_double());
      if (r <= 5) o.residual(unitarity_residual(assemble_matrix(stwist, r, p)).to_double());
    }
  for (auto A : {cx(0.5, 0), cx(-0.8, 0), cx(0, 0.6), cx(0, -0.3)}) {
    SixjEvaluator ev{QPoint::numeric(A)};
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b)
        for (int d = 0; d <= 5; ++d)
          for (int e = 0; e <= 5; ++e)
            for (int c = 0; c <= 10; ++c)
              for (int g = c; g <= 10; g += 2) {
                if (!adm(a, b, c) || !adm(c, d, e) || !adm(a, b, g) || !adm(g, d, e)) continue;
                PrecComplex s(kDigits);
                for (int f = 0; f <= 10; ++f)
                  if (adm(a, e, f) && adm(b, d, f))
                    s += ev.renormalized_6j({a, b, c, d, e, f}) * ev.renormalized_6j({a, b, g, d, e, f});
                o.residual(distance(s, PrecComplex(c == g ? 1 : 0, kDigits)).to_double());
              }
  }
  return o;
}

// Max rule on one quadrilateral, from the quad labels only.
Coloring max_rule(const Triangulation& x, const Coloring& c, int e) {
  Quad q = quad_of(x, e);
  Coloring d = c;
  auto at = [&](int k) { return c[static_cast<size_t>(k)]; };
  d[static_cast<size_t>(e)] = std::max(at(q.a) + at(q.d), at(q.b) + at(q.e)) - at(q.c);
  return d;
}

// 7. A = 0 gives the multicurve permutation exactly.
Outcome zero_degeneration() {
  Outcome o{0, 0.0};
  SixjEvaluator ev{QPoint::numeric(PrecComplex(0, kDigits))};
  for (auto x : {punctured_torus(), four_punctured_sphere()})
    for (const auto& c : enumerate_admissible(x, 4))
      for (int e = 0; e < x.num_edges(); ++e)
        o.residual(max_difference(flip_operator_apply(basis_vector(c, kDigits), x, e, ev),
                                  basis_vector(max_rule(x, c, e), kDigits))
                       .to_double());
  for (auto g : {torus_twist(0), torus_twist(1), sphere_twist(sphere_curves()[1])})
    for (const auto& c : enumerate_admissible(g.base, 3)) {
      Coloring img = c;
      Triangulation y = g.base;
      for (int e : g.flips) {
        img = max_rule(y, img, e);
        y = flip(y, e);
      }
      img = relabel_coloring(img, g.edge_map());
      o.residual(max_difference(rep_apply(g, basis_vector(c, kDigits), ev), basis_vector(img, kDigits)).to_double());
    }
  return o;
}

// 8. Partial-coloring blocks stay below 12 K(A) / (1 - |A|).
Outcome block_norms() {
  Outcome o{0, 1.0};
  for (double r : {0.3, 0.5, 0.7}) {
    auto A = cx(r * std::cos(0.4), r * std::sin(0.4));
    SixjEvaluator ev{QPoint::numeric(A)};
    const Real K = effective_constant(A);
    const double bound = (K * 12 / (Real(1L, K.bits()) - A.abs())).to_double();
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b)
        for (int d = 0; d <= 8; ++d)
          for (int e = 0; e <= 8; ++e) {
            BlockNorm bn = block_norm_check(a, b, d, e, ev, K);
            if (bn.rows == 0) continue;
            double frob = 0;
            for (int c = 0; c <= 16; ++c)
              for (int f = 0; f <= 16; ++f)
                if (adm(a, b, c) && adm(c, d, e) && adm(a, e, f) && adm(b, d, f))
                  frob += ev.renormalized_6j({a, b, c, d, e, f}).norm2().to_double();
            frob = std::sqrt(frob);
            o.require(bn.norm2 <= frob * (1 + 1e-12), "2-norm above Frobenius norm");
            o.require(std::abs(bn.bound.to_double() - bound) <= 1e-12 * bound, "bound mismatch");
            o.residual(bn.norm2 / bound);
          }
  }
  o.note = "ratio norm2 / (12K/(1-|A|))";
  return o;
}

// 9. Dimensions of the reduced module on the punctured torus.
Outcome dimensions() {
  Outcome o{0, 0.0};
  auto x = punctured_torus();
  for (int r = 2; r <= 8; ++r) {
    std::vector<Coloring> brute;
    const int w = r - 2;
    for (int i = 0; i <= w; ++i)
      for (int j = 0; j <= w; ++j)
        for (int k = 0; k <= w; ++k)
          if (adm(i, j, k) && i + j + k <= 2 * (r - 2)) brute.push_back({i, j, k});
    auto got = enumerate_r_admissible(x, r);
    o.require(got == brute, "enumeration differs from brute force at r=" + std::to_string(r));
    for (int e = 0; e < 3; ++e)
      o.require(enumerate_r_admissible(flip(x, e), r).size() == got.size(), "dimension changes across a flip");
  }
  o.require(enumerate_r_admissible(x, 2).size() == 1, "dim H_2 != 1");
  o.require(enumerate_r_admissible(x, 3).size() == 4, "dim H_3 != 4");
  return o;
}

// 10. The Dehn twist acts nontrivially from the probe level on.
Outcome faithfulness() {
  Outcome o{0, 0.0};
  auto g = torus_twist(0);
  auto w = faithfulness_probe(g, 3);
  o.require(w.r0 > w.N / 2.0 + 1, "r0 not above N/2 + 1");
  double smallest = INFINITY;
  for (int r = w.r0; r <= w.r0 + 4; ++r)
    for (long k = 1; k < 4 * r; k += 2) {
      if (std::gcd(k, static_cast<long>(r)) != 1) continue;
      QPoint p = QPoint::root(k, 2 * r, kDigits);
      smallest = std::min(smallest, identity_distance(assemble_matrix(g, r, p)).to_double());
    }
  o.require(smallest > 1e-6, "matrix equals identity");
  o.note = "r0=" + std::to_string(w.r0) + ", min |rho - id| = " + std::to_string(smallest);
  return o;
}

// Characteristic polynomial by Faddeev-LeVerrier in exact rationals.
std::vector<mpq_class> charpoly(const IncidenceMatrix& M) {
  const size_t n = static_cast<size_t>(M.n());
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n)), Mk(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A[i][j] = M.data[i][j];
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) next[i][j] += A[i][l] * Mk[l][j];
    // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0 and c_n = 1.
    for (size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mpq_class tr = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) tr += A[i][l] * next[l][i];
    c[n - k] = -tr / static_cast<long>(k);
    Mk = next;
  }
  return c;
}

long double horner(const std::vector<mpq_class>& c, long double x) {
  long double v = 0;
  for (size_t k = c.size(); k-- > 0;) v = v * x + static_cast<long double>(c[k].get_d());
  return v;
}

long double largest_root(const std::vector<mpq_class>& c, long double hi) {
  const int steps = 200000;
  long double prev = hi;
  for (int s = 1; s <= steps; ++s) {
    long double x = hi * (steps - s) / steps;
    if ((horner(c, x) > 0) != (horner(c, prev) > 0) || horner(c, x) == 0) {
      long double lo = x, up = prev;
      for (int it = 0; it < 200; ++it) {
        long double mid = (lo + up) / 2;
        if ((horner(c, mid) > 0) == (horner(c, up) > 0)) up = mid;
        else lo = mid;
      }
      return (lo + up) / 2;
    }
    prev = x;
  }
  return NAN;
}

// 11. Ham-Song, dilatation against the characteristic polynomial, level bound.
Outcome anosov() {
  Outcome o{0, 1e-10};
  std::mt19937_64 rng(11);
  int made = 0;
  while (made < 100) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    IncidenceMatrix M;
    M.data.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (auto& row : M.data)
      for (auto& v : row) v = std::uniform_int_distribution<long>(0, 5)(rng);
    if (!is_perron_frobenius(M)) continue;
    ++made;
    Dilatation d = dilatation(M);
    o.require(ham_song_check(M, d), "Ham-Song fails");
    if (n <= 4) {
      long double rowmax = 0;
      for (const auto& row : M.data) rowmax = std::max<long double>(rowmax, std::accumulate(row.begin(), row.end(), 0L));
      const long double root = largest_root(charpoly(M), rowmax + 1);
      o.residual(static_cast<double>(std::fabs(root - d.lambda.to_double()) / root));
      o.require(d.lo.to_double() <= root * (1 + 1e-15) && root * (1 - 1e-15) <= d.hi.to_double(), "enclosure misses root");
    }
    if (d.lambda > 1.0)
      for (int chi = -3; chi <= -1; ++chi) {
        const mpq_class lam = d.hi.to_rational();
        mpq_class pw = 1;
        for (int k = 0; k < -9 * chi; ++k) pw *= lam;
        const mpq_class B = mpq_class(-6 * chi) * (pw - 9 * chi - 1) + 1;
        const mpz_class r = level_bound(chi, lam);
        o.require(mpq_class(r) > B && !(mpq_class(r - 1) > B), "level bound not minimal");
      }
  }
  IncidenceMatrix pair{{{2, 1}, {1, 1}}};
  const mpz_class rb = level_bound(-1, dilatation(pair).hi.to_rational());
  const int r0 = faithfulness_probe(torus_twist(0), 3).r0;
  o.require(mpz_class(r0) <= rb, "probe level above the bound");
  o.note = "r0=" + std::to_string(r0) + " <= r_bound=" + rb.get_str();
  return o;
}

// 12. Yang-Mills weights against the conjugated change of basis.
Outcome yang_mills() {
  Outcome o{0, 1e-20};
  for (auto A : {cx(0.37, 0.41), cx(0.6, 0), cx(0, -0.5)}) {
    SixjEvaluator ev{QPoint::numeric(A)};
    for (auto x : {punctured_torus(), four_punctured_sphere()}) {
      auto cols = enumerate_admissible(x, 4);
      for (int e = 0; e < x.num_edges(); ++e) {
        Quad q = quad_of(x, e);
        Triangulation y = flip(x, e);
        for (const auto& s : cols) {
          if (!is_admissible(y, s)) continue;
          const PrecComplex ws = ym_weight(y, s, ev);
          // Diagonal formula recomputed from theta and circle values.
          PrecComplex direct(1, kDigits);
          for (int t = 0; t < y.num_triangles(); ++t) {
            auto te = y.triangle_edges(t);
            direct *= ev.theta({s[static_cast<size_t>(te[0])], s[static_cast<size_t>(te[1])], s[static_cast<size_t>(te[2])]});
          }
          for (int v : s) direct /= ev.circle(v);
          o.residual((distance(direct, ws) / ws.abs()).to_double());
          for (int f2 = s[static_cast<size_t>(e)]; f2 <= 8; f2 += 2) {
            Coloring s2 = s;
            s2[static_cast<size_t>(e)] = f2;
            if (!is_admissible(y, s2)) continue;
            const PrecComplex ws2 = ym_weight(y, s2, ev);
            PrecComplex sum(kDigits), hat(kDigits);
            for (int c = 0; c <= 8; ++c) {
              Coloring xc = s;
              xc[static_cast<size_t>(e)] = c;
              if (!is_admissible(x, xc)) continue;
              const int a = s[static_cast<size_t>(q.a)], b = s[static_cast<size_t>(q.b)], d = s[static_cast<size_t>(q.d)],
                        ee = s[static_cast<size_t>(q.e)];
              const PrecComplex X1 = ev.recoupling({a, b, c, d, ee, s[static_cast<size_t>(e)]});
              const PrecComplex X2 = ev.recoupling({a, b, c, d, ee, f2});
              const PrecComplex w = ym_weight(x, xc, ev);
              sum += X1 * X2 * w;
              hat += X1 * X2 * w / (ws.sqrt() * ws2.sqrt());
              if (f2 == s[static_cast<size_t>(e)]) {
                // Squared hat coefficient equals the squared renormalized symbol.
                const PrecComplex h2 = X1 * X1 * w / ws;
                const PrecComplex R = ev.renormalized_6j({a, b, c, d, ee, f2});
                const Real scale = max((R * R).abs(), Real(1L, R.bits()));
                o.residual((distance(h2, R * R) / scale).to_double());
              }
            }
            const bool diag = f2 == s[static_cast<size_t>(e)];
            o.residual((distance(sum, diag ? ws : PrecComplex(kDigits)) / ws.abs()).to_double());
            o.residual(distance(hat, PrecComplex(diag ? 1 : 0, kDigits)).to_double());
          }
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identities: orthogonality (<=6) and Biedenharn-Elliot (<=4)", identities},
      {"zero limit at |A|=1e-4 within 10|A|", zero_limit},
      {"symmetry and reality", symmetry},
      {"estimate |A|^Q K(A) and Q-fiber <= 12", estimate},
      {"path independence (torus, four-punctured sphere)", paths},
      {"unitarity at +-exp(i pi/2r), r=2..6, block orthogonality", unitarity},
      {"A=0 permutation action", zero_degeneration},
      {"block norms a,b,d,e <= 8", block_norms},
      {"dimensions of H_r on the punctured torus", dimensions},
      {"faithfulness from r0 to r0+4", faithfulness},
      {"anosov suite", anosov},
      {"Yang-Mills weights and hat normalization", yang_mills},
  };
  bool all = true;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed();
    std::printf("criterion %2zu: %s  %s  max residual %.3e, tol %.1e, %.1fs%s%s\n", k + 1, o.passed() ? "PASS" : "FAIL",
                criteria[k].first.c_str(), o.worst, o.tol, secs, o.note.empty() ? "" : "; ", o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
