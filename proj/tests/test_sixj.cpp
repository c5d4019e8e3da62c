#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>
#include <map>

#include "skeinrep/errors.hpp"
#include "skeinrep/sixj.hpp"

using namespace skeinrep;

namespace {

using cld = std::complex<long double>;

// Closed-form evaluations in long double, built from [n] = (A^2n - A^-2n)/(A^2 - A^-2).
struct Oracle {
  cld A;
  cld qint(int n) const { return (std::pow(A, 2 * n) - std::pow(A, -2 * n)) / (A * A - 1.0L / (A * A)); }
  cld fact(int n) const {
    cld p = 1;
    for (int k = 2; k <= n; ++k) p *= qint(k);
    return p;
  }
  cld circle(int a) const { return (a % 2 ? -1.0L : 1.0L) * qint(a + 1); }
  cld theta(int a, int b, int c) const {
    const int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    const long double sign = (m + n + p) % 2 ? -1.0L : 1.0L;
    return sign * fact(m + n + p + 1) * fact(m) * fact(n) * fact(p) / (fact(m + n) * fact(n + p) * fact(m + p));
  }
  cld tetra(const SixTuple& s) const {
    const std::array<int, 4> tri{(s.a + s.b + s.c) / 2, (s.c + s.d + s.e) / 2, (s.a + s.e + s.f) / 2, (s.b + s.d + s.f) / 2};
    const std::array<int, 3> sq{(s.a + s.d + s.b + s.e) / 2, (s.a + s.d + s.c + s.f) / 2, (s.b + s.e + s.c + s.f) / 2};
    cld pre = 1;
    for (int i : tri)
      for (int j : sq) pre *= fact(j - i);
    for (int x : {s.a, s.b, s.c, s.d, s.e, s.f}) pre /= fact(x);
    const int lo = *std::max_element(tri.begin(), tri.end()), hi = *std::min_element(sq.begin(), sq.end());
    cld sum = 0;
    for (int z = lo; z <= hi; ++z) {
      cld den = 1;
      for (int i : tri) den *= fact(z - i);
      for (int j : sq) den *= fact(j - z);
      sum += (z % 2 ? -1.0L : 1.0L) * fact(z + 1) / den;
    }
    return pre * sum;
  }
};

cld to_cld(const PrecComplex& z) { return {z.re().to_double(), z.im().to_double()}; }

std::vector<SixTuple> admissible_tuples(int n) {
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

}  // namespace

TEST(ColorTriple, Admissibility) {
  EXPECT_TRUE((ColorTriple{1, 1, 0}.admissible()));
  EXPECT_FALSE((ColorTriple{1, 1, 1}.admissible()));
  EXPECT_FALSE((ColorTriple{3, 1, 0}.admissible()));
  EXPECT_TRUE((ColorTriple{2, 2, 2}.r_admissible(5)));
  EXPECT_FALSE((ColorTriple{2, 2, 2}.r_admissible(4)));
}

TEST(Circle, Examples) {
  EXPECT_EQ(circle_eval(1), -(LaurentPoly::monomial(1, -2) + LaurentPoly::monomial(1, 2)));
  EXPECT_EQ(circle_eval(0), LaurentPoly(1));
}

TEST(Theta, Examples) {
  const auto A = PrecComplex::from_double(0.5, 0.2);
  EXPECT_TRUE(distance(theta_eval({1, 1, 0}, A), -eval(quantum_integer(2), A)) < 1e-36);
  EXPECT_THROW(theta_eval({1, 1, 1}, A), AdmissibilityError);
}

TEST(Theta, MatchesClosedForm) {
  const Oracle o{std::polar(0.6L, 0.4L)};
  const auto A = PrecComplex::from_double(static_cast<double>(o.A.real()), static_cast<double>(o.A.imag()));
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (!ColorTriple{a, b, c}.admissible()) continue;
        cld want = o.theta(a, b, c);
        EXPECT_LT(std::abs(to_cld(theta_eval({a, b, c}, A)) - want) / std::abs(want), 1e-12) << a << b << c;
      }
}

TEST(Theta, LeadingTermAtZero) {
  const auto A = PrecComplex::from_double(1e-3, 0);
  for (auto t : {ColorTriple{1, 1, 0}, ColorTriple{2, 2, 2}, ColorTriple{3, 2, 1}, ColorTriple{4, 4, 2}}) {
    const int s = t.sum();
    PrecComplex lead = A.pow(-s) * ((s / 2) % 2 ? -1L : 1L);
    EXPECT_LT(distance(theta_eval(t, A) / lead, PrecComplex(1, 40)).to_double(), 1e-4);
  }
}

TEST(Tetra, MatchesClosedForm) {
  const Oracle o{std::polar(0.7L, -1.1L)};
  const auto A = PrecComplex::from_double(static_cast<double>(o.A.real()), static_cast<double>(o.A.imag()));
  SixjEvaluator ev{QPoint::numeric(A)};
  for (const auto& s : admissible_tuples(4)) {
    cld want = o.tetra(s);
    if (std::abs(want) < 1e-30) continue;
    EXPECT_LT(std::abs(to_cld(ev.tetra(s)) - want) / std::abs(want), 1e-11) << s.to_string();
  }
}

TEST(Tetra, ZeroEdgeDegeneratesToTheta) {
  const auto A = PrecComplex::from_double(0.5, 0);
  EXPECT_TRUE(distance(tetra_eval({1, 1, 0, 1, 1, 0}, A), theta_eval({1, 1, 0}, A)) < 1e-35);
  EXPECT_TRUE(distance(tetra_eval({2, 2, 0, 1, 1, 1}, A), theta_eval({2, 1, 1}, A)) < 1e-35);
  EXPECT_TRUE(distance(tetra_eval({3, 3, 0, 2, 2, 3}, A), theta_eval({3, 2, 3}, A)) < 1e-30);
}

TEST(PoleSet, Examples) {
  EXPECT_EQ(pole_set_for_sum(4, 100), (std::set<int>{2, 3}));
  EXPECT_TRUE(pole_set(SixTuple{}, 100).empty());
  EXPECT_EQ(pole_set_for_sum(12, 100), (std::set<int>{2, 3, 4, 5, 6, 7}));
  for (int M = 0; M <= 20; M += 2)
    for (int r : pole_set_for_sum(M, 100)) EXPECT_LT(2 * (r - 2), M);
}

TEST(Sixj, PoleAtSmallLevel) {
  SixTuple s{4, 4, 4, 4, 4, 4};
  SixjEvaluator ev{QPoint::root(1, 12)};
  try {
    ev.renormalized_6j(s);
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_TRUE(e.bad_set().count(6));
  }
  SixjEvaluator fine{QPoint::root(1, 16)};
  EXPECT_NO_THROW(fine.renormalized_6j(s));
}

TEST(SqrtCircle, SquaresBack) {
  for (auto A : {PrecComplex::from_double(0.3, 0), PrecComplex::from_double(0, 0.6), PrecComplex::from_double(0.2, 0.1)}) {
    EXPECT_TRUE(sqrt_circle(0, A) == PrecComplex(1, 40));
    for (int a = 0; a <= 10; ++a) {
      PrecComplex s = sqrt_circle(a, A), c = eval(circle_eval(a), A);
      EXPECT_LT((distance(s * s, c) / c.abs()).to_double(), 1e-35) << a;
    }
  }
}

TEST(SqrtCircle, LeadingTermAtZero) {
  const auto A = PrecComplex::from_double(0, 1e-4);
  for (int a = 0; a <= 6; ++a) {
    PrecComplex lead = A.pow(-a).mul_i(a);
    EXPECT_LT(distance(sqrt_circle(a, A) / lead, PrecComplex(1, 40)).to_double(), 1e-6) << a;
  }
}

TEST(Renormalized, ZeroIsMaxRuleIndicator) {
  const PrecComplex zero(0, 40);
  for (const auto& s : admissible_tuples(4)) {
    const bool hit = s.c + s.f == std::max(s.a + s.d, s.b + s.e);
    EXPECT_TRUE(renormalized_6j(s, zero) == PrecComplex(hit ? 1 : 0, 40)) << s.to_string();
  }
}

TEST(Renormalized, SymmetryAndReality) {
  for (auto A : {PrecComplex::from_double(0.55, 0), PrecComplex::from_double(-0.3, 0), PrecComplex::from_double(0, 0.45)}) {
    SixjEvaluator ev{QPoint::numeric(A)};
    for (const auto& s : admissible_tuples(4)) {
      PrecComplex v = ev.renormalized_6j(s);
      EXPECT_LT(distance(v, ev.renormalized_6j({s.a, s.e, s.f, s.d, s.b, s.c})).to_double(), 1e-35);
      EXPECT_LT(abs(v.im()).to_double(), 1e-35);
    }
  }
}

TEST(Renormalized, Orthogonality) {
  SixjEvaluator ev{QPoint::numeric(PrecComplex::from_double(0.7, 0))};
  const int N = 4;
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b)
      for (int c = 0; c <= N; ++c)
        for (int d = 0; d <= N; ++d)
          for (int e = 0; e <= N; ++e)
            for (int g = 0; g <= N; ++g) {
              if (!ColorTriple{a, b, c}.admissible() || !ColorTriple{c, d, e}.admissible()) continue;
              if (!ColorTriple{a, b, g}.admissible() || !ColorTriple{g, d, e}.admissible()) continue;
              PrecComplex sum(40), qsum(40);
              for (int f = 0; f <= 2 * N; ++f) {
                SixTuple s{a, b, c, d, e, f}, t{a, b, g, d, e, f};
                if (!s.admissible() || !t.admissible()) continue;
                sum += ev.renormalized_6j(s) * ev.renormalized_6j(t);
                qsum += ev.quantum_6j(s) * ev.quantum_6j({a, e, f, d, b, g});
              }
              PrecComplex want(c == g ? 1 : 0, 40);
              EXPECT_LT(distance(sum, want).to_double(), 1e-30);
              EXPECT_LT(distance(qsum, want).to_double(), 1e-30);
            }
}

TEST(Unitary, DiffersFromRenormalizedBySquareRoots) {
  const auto A = PrecComplex::from_double(0.4, 0.3);
  SixjEvaluator ev{QPoint::numeric(A)};
  for (const auto& s : admissible_tuples(3)) {
    PrecComplex u = ev.unitary_6j(s);
    PrecComplex r = u * ev.sqrt_circle(s.c) * ev.sqrt_circle(s.f);
    EXPECT_LT(distance(r, ev.renormalized_6j(s)).to_double(), 1e-33);
  }
}

TEST(QExponent, Examples) {
  EXPECT_EQ(q_exponent(SixTuple{}), 0);
  for (const auto& s : admissible_tuples(5)) {
    if (s.c + s.f == std::max(s.a + s.d, s.b + s.e)) EXPECT_EQ(q_exponent(s), 0) << s.to_string();
    EXPECT_GE(q_exponent(s), 0);
  }
}

TEST(QExponent, FiberBound) {
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c)
        for (int d = 0; d <= 10; ++d)
          for (int e = 0; e <= 10; ++e) {
            if (!ColorTriple{a, b, c}.admissible() || !ColorTriple{c, d, e}.admissible()) continue;
            std::map<int, int> fiber;
            for (int f = 0; f <= 60; ++f)
              if (SixTuple s{a, b, c, d, e, f}; s.admissible()) ++fiber[q_exponent(s)];
            for (auto [n, count] : fiber) EXPECT_LE(count, 12);
          }
}

TEST(Estimate, BoundHolds) {
  for (auto A : {PrecComplex::from_double(0.5, 0), PrecComplex::from_double(0, 0.5), PrecComplex::from_double(0.3, 0.4)}) {
    SixjEvaluator ev{QPoint::numeric(A)};
    Real K = effective_constant(A);
    for (const auto& s : admissible_tuples(4)) EXPECT_TRUE(ev.renormalized_6j(s).abs() <= estimate_bound(s, A, K)) << s.to_string();
  }
}

TEST(Estimate, ConstantFiniteInsideDisk) {
  for (double r : {0.1, 0.5, 0.9}) {
    Real K = effective_constant(PrecComplex::from_double(0, r));
    EXPECT_GT(K.to_double(), 0);
    EXPECT_TRUE(std::isfinite(K.to_double()));
  }
  EXPECT_THROW(estimate_bound(SixTuple{}, PrecComplex::from_double(1, 0)), DomainError);
}
