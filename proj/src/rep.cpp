#include "skeinrep/rep.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <complex>
#include <thread>

#include "skeinrep/errors.hpp"

namespace skeinrep {

SparseVec basis_vector(const Coloring& c, int digits) { return SparseVec{{c, PrecComplex(1, digits)}}; }

Real max_difference(const SparseVec& v, const SparseVec& w) {
  Real worst(0L, bits_for_digits(PrecComplex::kDefaultDigits));
  auto consider = [&](const Real& x) {
    if (x > worst) worst = x;
  };
  for (const auto& [c, x] : v) {
    auto it = w.find(c);
    consider(it == w.end() ? x.abs() : distance(x, it->second));
  }
  for (const auto& [c, y] : w)
    if (!v.count(c)) consider(y.abs());
  return worst;
}

Coloring relabel_coloring(const Coloring& c, const std::vector<int>& m) {
  Coloring out(c.size());
  for (size_t j = 0; j < c.size(); ++j) out[static_cast<size_t>(m[j])] = c[j];
  return out;
}

namespace {

struct FlipRange {
  int lo, hi;
};

FlipRange new_diagonal_range(int a, int b, int d, int e, std::optional<int> level) {
  FlipRange r{std::max(std::abs(a - e), std::abs(b - d)), std::min(a + e, b + d)};
  if (level) r.hi = std::min(r.hi, 2 * (*level - 2) - std::max(a + e, b + d));
  return r;
}

}  // namespace

SparseVec flip_operator_apply(const SparseVec& v, const Triangulation& tri, int e, SixjEvaluator& ev) {
  const Quad q = quad_of(tri, e);
  const auto level = ev.point().level;
  SparseVec out;
  for (const auto& [sigma, x] : v) {
    if (!is_admissible(tri, sigma))
      throw AdmissibilityError("vector is supported on a non-admissible coloring");
    if (level && !is_r_admissible(tri, sigma, *level))
      throw AdmissibilityError("vector is supported outside the r-admissible colorings");
    auto w = [&](int k) { return sigma[static_cast<size_t>(k)]; };
    const int a = w(q.a), b = w(q.b), c = w(q.c), d = w(q.d), ee = w(q.e);
    const FlipRange range = new_diagonal_range(a, b, d, ee, level);
    for (int f = range.lo; f <= range.hi; f += 2) {
      PrecComplex coeff = ev.renormalized_6j(SixTuple{a, b, c, d, ee, f});
      if (coeff.is_zero()) continue;
      Coloring next = sigma;
      next[static_cast<size_t>(e)] = f;
      auto it = out.find(next);
      if (it == out.end())
        out.emplace(std::move(next), x * coeff);
      else
        it->second += x * coeff;
    }
  }
  return out;
}

SparseVec cocycle_apply(const SparseVec& v, const Triangulation& tri, const std::vector<int>& flips,
                        SixjEvaluator& ev) {
  SparseVec cur = v;
  Triangulation x = tri;
  for (int e : flips) {
    cur = flip_operator_apply(cur, x, e, ev);
    x = flip(x, e);
  }
  return cur;
}

SparseVec rep_apply(const MappingClass& g, const SparseVec& v, SixjEvaluator& ev) {
  SparseVec w = cocycle_apply(v, g.base, g.flips, ev);
  const auto m = g.edge_map();
  SparseVec out;
  for (auto& [c, x] : w) out.emplace(relabel_coloring(c, m), x);
  return out;
}

int path_max_triple_sum(const Triangulation& tri, const std::vector<int>& flips, const Coloring& start) {
  std::set<Coloring> support{start};
  Triangulation x = tri;
  int M = 0;
  for (int e : flips) {
    const Quad q = quad_of(x, e);
    std::set<Coloring> next;
    for (const auto& sigma : support) {
      auto w = [&](int k) { return sigma[static_cast<size_t>(k)]; };
      const int a = w(q.a), b = w(q.b), c = w(q.c), d = w(q.d), ee = w(q.e);
      const FlipRange range = new_diagonal_range(a, b, d, ee, std::nullopt);
      for (int f = range.lo; f <= range.hi; f += 2) {
        M = std::max(M, SixTuple{a, b, c, d, ee, f}.max_triple_sum());
        Coloring n = sigma;
        n[static_cast<size_t>(e)] = f;
        next.insert(std::move(n));
      }
    }
    support = std::move(next);
    x = flip(x, e);
  }
  return M;
}

Coefficient matrix_coefficient(const MappingClass& g, const Coloring& gamma, const Coloring& gamma_prime,
                               const QPoint& point) {
  if (!is_admissible(g.base, gamma) || !is_admissible(g.base, gamma_prime))
    throw AdmissibilityError("matrix coefficient needs admissible colorings");
  const int M = path_max_triple_sum(g.base, g.flips, gamma);
  Coefficient out{PrecComplex(point.digits()), pole_set_for_sum(M, M / 2 + 2)};
  if (point.level && out.bad_set.count(*point.level))
    throw BadRootError("level " + std::to_string(*point.level) + " lies in the excluded set", out.bad_set);
  SixjEvaluator ev(point);
  SparseVec w = rep_apply(g, basis_vector(gamma, point.digits()), ev);
  auto it = w.find(gamma_prime);
  if (it != w.end()) out.value = it->second;
  return out;
}

namespace {

void check_level(int r, const QPoint& point) {
  if (r < 2) throw DomainError("level must be at least 2");
  if (!point.level || *point.level != r)
    throw DomainError("evaluation point does not have level " + std::to_string(r));
}

}  // namespace

RepMatrix assemble_matrix(const MappingClass& g, int r, const QPoint& point, unsigned threads) {
  check_level(r, point);
  RepMatrix m;
  m.r = r;
  m.basis = enumerate_r_admissible(g.base, r);
  m.row_basis = m.basis;
  const size_t n = m.dim();
  m.data.assign(n * n, PrecComplex(point.digits()));
  std::map<Coloring, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(m.basis[i], i);

  SixjEvaluator ev(point);
  auto column = [&](size_t j) {
    SparseVec w = rep_apply(g, basis_vector(m.basis[j], point.digits()), ev);
    for (auto& [c, x] : w) {
      auto it = index.find(c);
      if (it == index.end()) throw AdmissibilityError("image left the r-admissible basis");
      m.data[it->second * n + j] = x;
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(n, 1)));
  if (threads <= 1) {
    for (size_t j = 0; j < n; ++j) column(j);
    return m;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t j = t; j < n; j += threads) column(j);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return m;
}

RepMatrix flip_matrix(const Triangulation& tri, int e, int r, const QPoint& point) {
  check_level(r, point);
  const Triangulation y = flip(tri, e);
  RepMatrix m;
  m.r = r;
  m.basis = enumerate_r_admissible(tri, r);
  m.row_basis = enumerate_r_admissible(y, r);
  if (m.basis.size() != m.row_basis.size()) throw Error("flip changed the dimension of H_r");
  const size_t n = m.dim();
  m.data.assign(n * n, PrecComplex(point.digits()));
  std::map<Coloring, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(m.row_basis[i], i);
  SixjEvaluator ev(point);
  for (size_t j = 0; j < n; ++j) {
    SparseVec w = flip_operator_apply(basis_vector(m.basis[j], point.digits()), tri, e, ev);
    for (auto& [c, x] : w) m.data[index.at(c) * n + j] = x;
  }
  return m;
}

Real unitarity_residual(const RepMatrix& m) {
  const size_t n = m.dim();
  const int digits = n ? m.data.front().digits() : PrecComplex::kDefaultDigits;
  Real worst(0L, bits_for_digits(digits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PrecComplex s(digits);
      for (size_t k = 0; k < n; ++k) s += m.at(k, i).conj() * m.at(k, j);
      if (i == j) s -= PrecComplex(1, digits);
      Real d = s.abs();
      if (d > worst) worst = d;
    }
  return worst;
}

Real identity_distance(const RepMatrix& m) {
  const size_t n = m.dim();
  const int digits = n ? m.data.front().digits() : PrecComplex::kDefaultDigits;
  Real worst(0L, bits_for_digits(digits));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PrecComplex s = m.at(i, j);
      if (i == j) s -= PrecComplex(1, digits);
      Real d = s.abs();
      if (d > worst) worst = d;
    }
  return worst;
}

BlockNorm block_norm_check(int a, int b, int d, int e, SixjEvaluator& ev, const Real& K) {
  const PrecComplex& A = ev.A();
  const Real one(1L, A.bits());
  if (A.abs() >= one) throw DomainError("block norm check needs |A| < 1");
  std::vector<int> cs, fs;
  for (int c = std::max(std::abs(a - b), std::abs(d - e)); c <= std::min(a + b, d + e); c += 2) cs.push_back(c);
  for (int f = std::max(std::abs(a - e), std::abs(b - d)); f <= std::min(a + e, b + d); f += 2) fs.push_back(f);
  if ((a + b + d + e) % 2) {
    cs.clear();
    fs.clear();
  }
  BlockNorm out;
  out.rows = cs.size();
  out.cols = fs.size();
  out.bound = K * 12 / (one - A.abs());
  if (cs.empty() || fs.empty()) return out;
  Eigen::MatrixXcd M(static_cast<Eigen::Index>(cs.size()), static_cast<Eigen::Index>(fs.size()));
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = 0; j < fs.size(); ++j) {
      PrecComplex v = ev.renormalized_6j(SixTuple{a, b, cs[i], d, e, fs[j]});
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {v.re().to_double(), v.im().to_double()};
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  out.norm2 = svd.singularValues()(0);
  out.norm1 = M.cwiseAbs().colwise().sum().maxCoeff();
  out.norminf = M.cwiseAbs().rowwise().sum().maxCoeff();
  return out;
}

BlockNorm block_norm_check(int a, int b, int d, int e, const PrecComplex& A) {
  SixjEvaluator ev(QPoint{A, std::nullopt});
  return block_norm_check(a, b, d, e, ev, effective_constant(A));
}

PrecComplex ym_weight(const Triangulation& tri, const Coloring& c, SixjEvaluator& ev) {
  if (!is_admissible(tri, c)) throw AdmissibilityError("Yang-Mills weight needs an admissible coloring");
  if (ev.point().level && !is_r_admissible(tri, c, *ev.point().level))
    throw AdmissibilityError("Yang-Mills weight at a root of unity needs an r-admissible coloring");
  PrecComplex num(1, ev.digits()), den(1, ev.digits());
  for (int t = 0; t < tri.num_triangles(); ++t) {
    auto e = tri.triangle_edges(t);
    num *= ev.theta({c[static_cast<size_t>(e[0])], c[static_cast<size_t>(e[1])], c[static_cast<size_t>(e[2])]});
  }
  for (int w : c) den *= ev.circle(w);
  return num / den;
}

FaithfulnessWitness faithfulness_probe(const MappingClass& g, int search_weight) {
  std::optional<FaithfulnessWitness> best;
  for (const auto& gamma : enumerate_admissible(g.base, search_weight)) {
    Coloring image = act_on_multicurve(g, gamma);
    if (image == gamma) continue;
    const int N = std::max(max_triangle_sum(g.base, gamma), max_triangle_sum(g.base, image));
    if (!best || N < best->N) best = FaithfulnessWitness{gamma, image, N, N / 2 + 2};
  }
  if (!best) throw NotFoundError("mapping class fixes every searched multicurve");
  return *best;
}

}  // namespace skeinrep
