#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skeinrep/precision.hpp"
#include "skeinrep/qlaurent.hpp"

namespace skeinrep {

struct ColorTriple {
  int a = 0, b = 0, c = 0;

  int sum() const { return a + b + c; }
  bool admissible() const;
  bool r_admissible(int r) const { return admissible() && sum() <= 2 * (r - 2); }
  auto operator<=>(const ColorTriple&) const = default;
};

/// Colors of a tetrahedron.  The faces are (a,b,c), (c,d,e), (a,e,f), (b,d,f);
/// a/d, b/e and c/f are opposite edges.
struct SixTuple {
  int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  std::array<ColorTriple, 4> triples() const;
  bool admissible() const;
  bool r_admissible(int r) const;
  /// Half sums of the faces.
  std::array<int, 4> triangles() const;
  /// Half sums of pairs of opposite edges.
  std::array<int, 3> squares() const;
  /// {a+d, b+e, c+f} in decreasing order.
  std::array<int, 3> opposite_sums() const;
  /// Largest face sum.
  int max_triple_sum() const;
  std::string to_string() const;
  auto operator<=>(const SixTuple&) const = default;
};

LaurentPoly circle_eval(int a);

/// Orders r with 2(r-2) < M, for 2 <= r <= max_r.
std::set<int> pole_set(const SixTuple& s, int max_r);
std::set<int> pole_set_for_sum(int M, int max_r);

/// The alternating z-sum of the tetrahedron formula, exact in A.
const LaurentPoly& tetra_zsum(const SixTuple& s);

/// Exponent of t = A^4 in the z-th summand of the tetrahedron formula:
/// 3/2 z^2 - (L + 1/2) z + (L^2 + sum of products of non-opposite colors)/8.
mpq_class summand_exponent(const SixTuple& s, int z);

/// 1/2 (C1-C2)(C1-C3) + C1 - c - f
int q_exponent(const SixTuple& s);

/// Memoised evaluations at one point A.  Safe for concurrent use.
class SixjEvaluator {
 public:
  explicit SixjEvaluator(QPoint point);
  explicit SixjEvaluator(const PrecComplex& A);

  const QPoint& point() const { return point_; }
  const PrecComplex& A() const { return point_.A; }
  int digits() const { return point_.A.digits(); }

  PrecComplex quantum_integer(int n);
  PrecComplex factorial(int n);
  PrecComplex circle(int a);
  PrecComplex theta(const ColorTriple& t);
  PrecComplex tetra(const SixTuple& s);
  /// Tet * circle_c / (theta(a,e,f) theta(d,b,f))
  PrecComplex quantum_6j(const SixTuple& s);
  /// Coefficient of the c-colored H-graph in the expansion of the f-colored one:
  /// Tet * circle_c / (theta(a,b,c) theta(d,e,c)).
  PrecComplex recoupling(const SixTuple& s);
  PrecComplex sqrt_circle(int a);
  PrecComplex sqrt_theta(const ColorTriple& t);
  PrecComplex renormalized_6j(const SixTuple& s);
  PrecComplex unitary_6j(const SixTuple& s);

 private:
  void check_triple(const ColorTriple& t) const;
  void check_tuple(const SixTuple& s) const;
  PrecComplex principal_root(const PrecComplex& p, const char* what) const;
  PrecComplex one() const { return PrecComplex(1, digits()); }

  QPoint point_;
  std::mutex mu_;
  std::vector<PrecComplex> qint_, fact_;
  std::map<int, PrecComplex> sqrt_circle_;
  std::map<ColorTriple, PrecComplex> theta_, sqrt_theta_;
  std::map<SixTuple, PrecComplex> tetra_, renorm_;
};

PrecComplex theta_eval(const ColorTriple& t, const PrecComplex& A);
PrecComplex tetra_eval(const SixTuple& s, const PrecComplex& A);
PrecComplex quantum_6j(const SixTuple& s, const PrecComplex& A);
PrecComplex sqrt_circle(int a, const PrecComplex& A);
PrecComplex sqrt_theta(const ColorTriple& t, const PrecComplex& A);
PrecComplex renormalized_6j(const SixTuple& s, const PrecComplex& A);
PrecComplex unitary_6j(const SixTuple& s, const PrecComplex& A);

/// K(A) = K2^19 / K1^22 * (1+|t|)^3 / (1-|t|)^2 with t = A^4.
Real effective_constant(const PrecComplex& A);
/// |A|^Q K(A)
Real estimate_bound(const SixTuple& s, const PrecComplex& A);
Real estimate_bound(const SixTuple& s, const PrecComplex& A, const Real& K);

}  // namespace skeinrep
