#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "skeinrep/anosov.hpp"
#include "skeinrep/errors.hpp"
#include "skeinrep/io.hpp"
#include "skeinrep/verify.hpp"

using namespace skeinrep;

namespace {

enum Exit { kOk = 0, kFail = 1, kPole = 2, kAdmissibility = 3, kParse = 4, kBudget = 5 };

std::string set_string(const std::set<int>& s) {
  std::string out = "{";
  for (int r : s) out += (out.size() > 1 ? "," : "") + std::to_string(r);
  return out + "}";
}

nlohmann::json bigint_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

int cmd_eval6j(const std::vector<int>& colors, const std::string& aspec, const std::string& variant, int digits) {
  SixTuple s{colors[0], colors[1], colors[2], colors[3], colors[4], colors[5]};
  if (!s.admissible()) throw AdmissibilityError("colors " + s.to_string() + " are not admissible");
  QPoint p = parse_point(aspec, digits);
  SixjEvaluator ev{p};
  PrecComplex v(digits);
  if (variant == "quantum") v = ev.quantum_6j(s);
  else if (variant == "unitary") v = ev.unitary_6j(s);
  else v = ev.renormalized_6j(s);
  nlohmann::json out;
  out["colors"] = colors;
  out["variant"] = variant;
  out["A"] = aspec;
  out["digits"] = digits;
  out["value"] = complex_to_json(v, digits);
  out["Q"] = q_exponent(s);
  out["F"] = pole_set(s, s.max_triple_sum() + 4);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_rep(const std::string& cls, int r, std::string aspec, int digits, unsigned threads) {
  MappingClass g = load_class(cls);
  if (aspec.empty()) aspec = "root:1/" + std::to_string(2 * r);
  QPoint p = parse_point(aspec, digits);
  std::cout << to_json(assemble_matrix(g, r, p, threads), digits).dump(2) << "\n";
  return kOk;
}

int cmd_coeff(const std::string& cls, const std::string& gamma, const std::string& gamma_prime,
              const std::vector<std::string>& specs, int digits) {
  MappingClass g = load_class(cls);
  const Coloring x = parse_coloring(gamma), y = parse_coloring(gamma_prime);
  const int shown = std::min(digits, 20);
  std::cout << "A_re,A_im,coeff_re,coeff_im\n";
  for (const auto& spec : specs) {
    QPoint p = parse_point(spec, digits);
    Coefficient c = matrix_coefficient(g, x, y, p);
    std::cout << p.A.re().to_string(shown) << "," << p.A.im().to_string(shown) << "," << c.value.re().to_string(shown)
              << "," << c.value.im().to_string(shown) << "\n";
  }
  return kOk;
}

int cmd_bound(int chi, const std::string& lambda, const std::string& matrix, bool punctured, int digits) {
  nlohmann::json out;
  mpq_class lam_hi;
  if (!matrix.empty()) {
    nlohmann::json j;
    std::ifstream in(matrix);
    try {
      j = in ? nlohmann::json::parse(in) : nlohmann::json::parse(matrix);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("matrix: ") + e.what());
    }
    IncidenceMatrix M;
    try {
      M.data = j.get<std::vector<std::vector<long>>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("matrix must be a 2-D integer array: ") + e.what());
    }
    Dilatation d = dilatation(M, 1e-30, digits);
    out["lambda_lo"] = d.lo.to_string(digits);
    out["lambda_hi"] = d.hi.to_string(digits);
    out["ham_song_ok"] = ham_song_check(M, d);
    lam_hi = d.hi.to_rational();
  } else {
    lam_hi = parse_decimal(lambda);
    out["lambda_lo"] = lambda;
    out["lambda_hi"] = lambda;
    out["ham_song_ok"] = nullptr;
  }
  out["chi"] = chi;
  out["r_bound"] = bigint_json(punctured ? punctured_level_bound(chi, lam_hi) : level_bound(chi, lam_hi));
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_curves(const std::string& surface, int r, int max_weight) {
  Triangulation tri = builtin_surface(surface);
  nlohmann::json out;
  out["surface"] = surface;
  std::vector<Coloring> cs;
  if (r > 0) {
    out["r"] = r;
    cs = enumerate_r_admissible(tri, r);
  } else {
    out["max_weight"] = max_weight;
    cs = enumerate_admissible(tri, max_weight);
  }
  out["dim"] = cs.size();
  out["colorings"] = cs;
  std::cout << out.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum 6j-symbols and skein representations of mapping class groups"};
  app.require_subcommand(1);
  int digits = 0;
  app.add_option("--digits", digits, "decimal digits (default: SKEINREP_DIGITS or 40)");

  auto* eval = app.add_subcommand("eval6j", "evaluate a 6j-symbol");
  std::vector<int> colors;
  std::string aspec = "0.5", variant = "renormalized";
  eval->add_option("colors", colors, "a b c d e f")->expected(6)->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--A", aspec, "re[,im] or root:k/2r");
  eval->add_option("--variant", variant)->check(CLI::IsMember({"quantum", "unitary", "renormalized"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyConfig cfg;
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-color", cfg.max_color);
  verify->add_option("--tolerance", cfg.tolerance);
  verify->add_option("--surface", cfg.surface)->check(CLI::IsMember({"torus1", "sphere4"}));
  verify->add_option("--samples", cfg.samples);
  verify->add_option("--seed", cfg.seed);

  auto* rep = app.add_subcommand("rep", "matrix of a mapping class at level r");
  std::string cls, rep_a;
  int r = 3;
  unsigned threads = 0;
  rep->add_option("class", cls, "builtin name or mapping-class JSON file")->required();
  rep->add_option("--r", r)->check(CLI::Range(2, 1000));
  rep->add_option("--A", rep_a, "root:k/2r with level r (default root:1/2r)");
  rep->add_option("--threads", threads);

  auto* coeff = app.add_subcommand("coeff", "matrix coefficient trace as CSV");
  std::string gamma, gamma_prime;
  std::vector<std::string> specs;
  coeff->add_option("class", cls)->required();
  coeff->add_option("--gamma", gamma)->required();
  coeff->add_option("--gamma-prime", gamma_prime)->required();
  coeff->add_option("--A", specs, "evaluation points")->required();

  auto* bound = app.add_subcommand("bound", "level bound for a pseudo-Anosov class");
  int chi = -1;
  std::string lambda, matrix;
  bool punctured = false;
  bound->add_option("--chi", chi)->required();
  auto* lam_opt = bound->add_option("--lambda", lambda, "dilatation (decimal)");
  bound->add_option("--matrix", matrix, "incidence matrix: JSON file or inline array")->excludes(lam_opt);
  bound->add_flag("--punctured", punctured, "use the punctured-surface bound");

  auto* curves = app.add_subcommand("curves", "enumerate colorings of a triangulation");
  std::string surface = "torus1";
  int curves_r = 0, max_weight = 2;
  curves->add_option("--surface", surface)->check(CLI::IsMember({"torus1", "sphere4"}));
  curves->add_option("--r", curves_r, "list r-admissible colorings");
  curves->add_option("--max-weight", max_weight, "list admissible colorings with weights up to this");

  auto* cls_cmd = app.add_subcommand("class", "print a builtin mapping class as JSON");
  std::string cls_name;
  cls_cmd->add_option("name", cls_name)->required()->check(CLI::IsMember(builtin_class_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (digits == 0) digits = digits_from_env();
    if (digits < 10) throw DomainError("digits must be at least 10");
    if (*eval) return cmd_eval6j(colors, aspec, variant, digits);
    if (*verify) {
      cfg.digits = digits;
      VerifyReport report = run_suite(suite, cfg);
      nlohmann::json j = report.to_json();
      j["digits"] = digits;
      std::cout << j.dump(2) << "\n";
      return report.passed() ? kOk : kFail;
    }
    if (*rep) return cmd_rep(cls, r, rep_a, digits, threads);
    if (*coeff) return cmd_coeff(cls, gamma, gamma_prime, specs, digits);
    if (*bound) {
      if (lambda.empty() && matrix.empty()) throw ParseError("bound needs --lambda or --matrix");
      return cmd_bound(chi, lambda, matrix, punctured, digits);
    }
    if (*curves) return cmd_curves(surface, curves_r, max_weight);
    if (*cls_cmd) {
      std::cout << to_json(builtin_class(cls_name)).dump(2) << "\n";
      return kOk;
    }
  } catch (const PoleError& e) {
    std::cerr << "pole: " << e.what() << " F=" << set_string(e.bad_set()) << "\n";
    return kPole;
  } catch (const AdmissibilityError& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return kAdmissibility;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const SearchBudgetError& e) {
    std::cerr << "search budget exhausted: " << e.what() << " radius=" << e.radius() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kFail;
}
