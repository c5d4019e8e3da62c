#include "skeinrep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "skeinrep/anosov.hpp"
#include "skeinrep/errors.hpp"
#include "skeinrep/rep.hpp"

namespace skeinrep {

void VerifyConfig::validate() const {
  if (digits < 10) throw DomainError("digits must be at least 10");
  if (tolerance < std::pow(10.0, -(digits - 5)))
    throw DomainError("tolerance is below the precision budget");
  if (max_color < 0) throw DomainError("max_color must be nonnegative");
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"max_residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    out["checks"].push_back(j);
  }
  return out;
}

namespace {

/// Running maximum of a residual together with the input that produced it.
struct Tracker {
  Tracker(std::string n, double t) : name(std::move(n)), tol(t) {}
  std::string name;
  double tol;
  double worst = 0;
  std::string witness;
  bool failed = false;

  void add(double r, const std::function<std::string()>& where) {
    if (std::isnan(r) || r > worst) {
      worst = std::isnan(r) ? INFINITY : r;
      witness = where();
    }
  }
  void fail(const std::string& why) {
    failed = true;
    if (witness.empty()) witness = why;
  }
  CheckResult result() const { return {name, worst, tol, !failed && worst <= tol, (failed || worst > tol) ? witness : ""}; }
};

std::string point_label(const PrecComplex& A) { return "A=" + A.to_string(12); }

std::vector<PrecComplex> sample_points(const VerifyConfig& cfg, int random_count) {
  std::vector<PrecComplex> pts{PrecComplex::from_double(0.5, 0, cfg.digits), PrecComplex::from_double(-0.5, 0, cfg.digits),
                               PrecComplex::from_double(0, 0.5, cfg.digits)};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> rad(0.1, 0.9), ang(0, 2 * M_PI);
  for (int k = 0; k < random_count; ++k) {
    const double r = rad(rng), t = ang(rng);
    pts.push_back(PrecComplex::from_double(r * std::cos(t), r * std::sin(t), cfg.digits));
  }
  return pts;
}

}  // namespace

VerifyReport verify_identities(const VerifyConfig& cfg) {
  cfg.validate();
  VerifyReport rep{"identities", {}};
  Tracker orth{"orthogonality", cfg.tolerance}, be{"biedenharn_elliot", cfg.tolerance}, sym{"symmetry", cfg.tolerance};
  const int N = cfg.max_color, B = std::min(cfg.max_color, 4);
  for (const auto& A : sample_points(cfg, 3)) {
    SixjEvaluator ev{QPoint::numeric(A)};
    const PrecComplex one(1, cfg.digits);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; b <= N; ++b)
        for (int c = 0; c <= N; ++c) {
          if (!ColorTriple{a, b, c}.admissible()) continue;
          for (int d = 0; d <= N; ++d)
            for (int e = 0; e <= N; ++e) {
              if (!ColorTriple{c, d, e}.admissible()) continue;
              for (int g = 0; g <= N; ++g) {
                if (!ColorTriple{a, b, g}.admissible() || !ColorTriple{g, d, e}.admissible()) continue;
                PrecComplex sum(cfg.digits);
                for (int f = 0; f <= 2 * N; ++f) {
                  SixTuple s{a, b, c, d, e, f}, t{a, b, g, d, e, f};
                  if (s.admissible() && t.admissible()) sum += ev.renormalized_6j(s) * ev.renormalized_6j(t);
                }
                if (c == g) sum -= one;
                orth.add(sum.abs().to_double(), [&] {
                  return point_label(A) + " (a,b,c,d,e,g)=" + SixTuple{a, b, c, d, e, g}.to_string();
                });
              }
              for (int f = 0; f <= 2 * N; ++f) {
                SixTuple s{a, b, c, d, e, f};
                if (!s.admissible()) continue;
                SixTuple t{a, e, f, d, b, c};
                sym.add(distance(ev.renormalized_6j(s), ev.renormalized_6j(t)).to_double(),
                        [&] { return point_label(A) + " " + s.to_string(); });
              }
            }
        }
    for (int a = 0; a <= B; ++a)
      for (int b = 0; b <= B; ++b)
        for (int c = 0; c <= B; ++c)
          for (int d = 0; d <= B; ++d)
            for (int e = 0; e <= B; ++e)
              for (int f = 0; f <= B; ++f) {
                SixTuple s1{a, b, c, d, e, f};
                if (!s1.admissible()) continue;
                for (int g = 0; g <= B; ++g)
                  for (int h = 0; h <= B; ++h)
                    for (int i = 0; i <= B; ++i) {
                      SixTuple s2{b, f, d, h, i, g};
                      if (!s2.admissible()) continue;
                      PrecComplex rhs(cfg.digits);
                      for (int l = 0; l <= 2 * B; ++l) {
                        SixTuple u1{c, e, d, h, i, l}, u2{b, a, c, l, i, g}, u3{a, g, l, h, e, f};
                        if (!u1.admissible() || !u2.admissible() || !u3.admissible()) continue;
                        rhs += ev.renormalized_6j(u1) * ev.renormalized_6j(u2) * ev.renormalized_6j(u3);
                      }
                      be.add(distance(ev.renormalized_6j(s1) * ev.renormalized_6j(s2), rhs).to_double(), [&] {
                        return point_label(A) + " " + s1.to_string() + " " + s2.to_string();
                      });
                    }
              }
  }
  rep.checks = {orth.result(), be.result(), sym.result()};
  return rep;
}

VerifyReport verify_unitarity(const VerifyConfig& cfg) {
  cfg.validate();
  VerifyReport rep{"unitarity", {}};
  Tracker flips{"flip_matrices", cfg.tolerance}, twists{"twist_matrices", cfg.tolerance};
  const std::vector<std::pair<std::string, Triangulation>> surfaces{{"torus1", punctured_torus()},
                                                                     {"sphere4", four_punctured_sphere()}};
  const std::vector<std::pair<std::string, MappingClass>> classes{
      {"torus_twist", torus_twist(0)}, {"sphere_half_twist", sphere_half_twist(sphere_curves()[0])}};
  for (int r = 2; r <= 6; ++r)
    for (long k : {1L, 2L * r + 1}) {
      QPoint p = QPoint::root(k, 2 * r, cfg.digits);
      auto where = [&](const std::string& what) { return what + " r=" + std::to_string(r) + " k=" + std::to_string(k); };
      for (const auto& [name, tri] : surfaces) {
        if (name == "sphere4" && r > 4) continue;
        for (int e = 0; e < tri.num_edges(); ++e)
          flips.add(unitarity_residual(flip_matrix(tri, e, r, p)).to_double(),
                    [&] { return where(name + " edge " + std::to_string(e)); });
      }
      for (const auto& [name, g] : classes) {
        if (name == "sphere_half_twist" && r > 4) continue;
        twists.add(unitarity_residual(assemble_matrix(g, r, p)).to_double(), [&] { return where(name); });
      }
    }
  rep.checks = {flips.result(), twists.result()};
  return rep;
}

namespace {

SparseVec along(const Triangulation& x, const std::vector<int>& path, const Coloring& c, SixjEvaluator& ev,
                const Triangulation& target, bool& ok) {
  Triangulation y = x;
  for (int e : path) y = flip(y, e);
  std::vector<int> id(static_cast<size_t>(x.num_edges()));
  for (size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
  ok = false;
  for (const auto& iso : find_isomorphisms(y, target))
    if (iso.edge_map(y, target) == id) ok = true;
  return cocycle_apply(basis_vector(c, ev.digits()), x, path, ev);
}

}  // namespace

VerifyReport verify_pentagon(const VerifyConfig& cfg) {
  cfg.validate();
  VerifyReport rep{"pentagon", {}};
  Tracker paths{"path_independence", cfg.tolerance};
  const bool torus = cfg.surface == "torus1";
  if (!torus && cfg.surface != "sphere4") throw DomainError("unknown surface " + cfg.surface);
  const Triangulation x = torus ? punctured_torus() : four_punctured_sphere();
  // Groups of flip paths sharing both endpoints.
  std::vector<std::vector<std::vector<int>>> groups;
  if (torus) {
    groups = {{{0}, {1, 1, 0}, {0, 2, 2}, {0, 0, 0}}, {{}, {1, 1}, {2, 0, 0, 2}}};
  } else {
    groups = {{{0, 5}, {5, 0}, {0, 0, 0, 5}}, {{}, {2, 2}, {3, 4, 4, 3}}};
  }
  std::vector<QPoint> points{QPoint::numeric(PrecComplex::from_double(0.6, 0, cfg.digits)),
                             QPoint::numeric(PrecComplex::from_double(0, 0.4, cfg.digits)),
                             QPoint::root(1, 8, cfg.digits)};
  const int w = torus ? 3 : 2;
  for (auto& p : points) {
    SixjEvaluator ev{p};
    auto colorings = p.level ? enumerate_r_admissible(x, *p.level) : enumerate_admissible(x, w);
    for (const auto& grp : groups) {
      Triangulation target = x;
      for (int e : grp.front()) target = flip(target, e);
      for (const auto& c : colorings) {
        bool ok = false;
        SparseVec ref = along(x, grp.front(), c, ev, target, ok);
        for (size_t k = 1; k < grp.size(); ++k) {
          SparseVec v = along(x, grp[k], c, ev, target, ok);
          if (!ok) paths.fail("paths end on different labeled triangulations");
          paths.add(max_difference(ref, v).to_double(), [&] { return point_label(p.A) + " path " + std::to_string(k); });
        }
      }
    }
    if (!torus) {
      // Pentagon: five alternating flips on two edges of one triangle swap their labels.
      const std::vector<int> pent{0, 1, 0, 1, 0};
      Triangulation y = x;
      for (int e : pent) y = flip(y, e);
      std::vector<int> swap{1, 0, 2, 3, 4, 5};
      bool found = false;
      for (const auto& iso : find_isomorphisms(y, x))
        if (iso.edge_map(y, x) == swap) found = true;
      if (!found) paths.fail("pentagon does not close up");
      for (const auto& c : colorings) {
        SparseVec v = cocycle_apply(basis_vector(c, cfg.digits), x, pent, ev), moved;
        for (const auto& [k, val] : v) moved.emplace(relabel_coloring(k, swap), val);
        paths.add(max_difference(moved, basis_vector(c, cfg.digits)).to_double(),
                  [&] { return point_label(p.A) + " pentagon"; });
      }
    }
  }
  rep.checks = {paths.result()};
  return rep;
}

VerifyReport verify_norms(const VerifyConfig& cfg) {
  cfg.validate();
  VerifyReport rep{"norms", {}};
  Tracker block{"block_norm_ratio", 1.0}, est{"estimate_ratio", 1.0};
  for (double r : {0.3, 0.5, 0.7}) {
    PrecComplex A = PrecComplex::from_double(r * std::cos(0.7), r * std::sin(0.7), cfg.digits);
    SixjEvaluator ev{QPoint::numeric(A)};
    Real K = effective_constant(A);
    const int N = cfg.max_color;
    for (int a = 0; a <= N; ++a)
      for (int b = 0; b <= N; ++b)
        for (int d = 0; d <= N; ++d)
          for (int e = 0; e <= N; ++e) {
            BlockNorm bn = block_norm_check(a, b, d, e, ev, K);
            if (bn.rows == 0) continue;
            block.add(bn.norm2 / bn.bound.to_double(), [&] {
              std::ostringstream os;
              os << "|A|=" << r << " (a,b,d,e)=(" << a << "," << b << "," << d << "," << e << ")";
              return os.str();
            });
            for (int c = 0; c <= 2 * N; ++c)
              for (int f = 0; f <= 2 * N; ++f) {
                SixTuple s{a, b, c, d, e, f};
                if (!s.admissible()) continue;
                est.add(ev.renormalized_6j(s).abs().to_double() / estimate_bound(s, A, K).to_double(),
                        [&] { return "|A|=" + std::to_string(r) + " " + s.to_string(); });
              }
          }
  }
  rep.checks = {block.result(), est.result()};
  return rep;
}

VerifyReport verify_anosov(const VerifyConfig& cfg) {
  cfg.validate();
  VerifyReport rep{"anosov", {}};
  Tracker hs{"ham_song", 0}, enclosure{"enclosure_width", cfg.tolerance}, bound{"level_bound_minimal", 0},
      order{"probe_below_bound", 0};
  std::mt19937_64 rng(cfg.seed);
  int made = 0;
  while (made < cfg.samples) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    IncidenceMatrix M;
    M.data.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (auto& row : M.data)
      for (auto& v : row) v = std::uniform_int_distribution<long>(0, 3)(rng);
    if (!is_perron_frobenius(M)) continue;
    ++made;
    Dilatation d = dilatation(M);
    std::ostringstream os;
    for (const auto& row : M.data) {
      for (long v : row) os << v << ' ';
      os << "; ";
    }
    if (!ham_song_check(M, d)) hs.fail("matrix " + os.str());
    enclosure.add(((d.hi - d.lo) / d.lambda).to_double(), [&] { return "matrix " + os.str(); });
    if (d.lambda > 1.0) {
      for (int chi = -3; chi <= -1; ++chi) {
        const mpq_class lam = d.hi.to_rational();
        const mpz_class r = level_bound(chi, lam);
        const long k = -9L * chi;
        mpq_class pw = 1;
        for (long j = 0; j < k; ++j) pw *= lam;
        const mpq_class B = mpq_class(-6L * chi) * (pw + k - 1) + 1;
        if (!(mpq_class(r) > B) || mpq_class(r - 1) > B) bound.fail("chi=" + std::to_string(chi) + " matrix " + os.str());
      }
    }
  }
  // Dehn twist pair on the punctured torus: incidence matrix [[2,1],[1,1]].
  IncidenceMatrix pair{{{2, 1}, {1, 1}}};
  Dilatation d = dilatation(pair);
  const mpz_class rb = level_bound(-1, d.hi.to_rational());
  const FaithfulnessWitness w = faithfulness_probe(torus_twist(0), 3);
  if (mpz_class(w.r0) > rb) order.fail("r0=" + std::to_string(w.r0) + " exceeds " + rb.get_str());
  rep.checks = {hs.result(), enclosure.result(), bound.result(), order.result()};
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "unitarity", "pentagon", "norms", "anosov"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyConfig& config) {
  if (suite == "identities") return verify_identities(config);
  if (suite == "unitarity") return verify_unitarity(config);
  if (suite == "pentagon") return verify_pentagon(config);
  if (suite == "norms") return verify_norms(config);
  if (suite == "anosov") return verify_anosov(config);
  throw DomainError("unknown suite " + suite);
}

}  // namespace skeinrep
