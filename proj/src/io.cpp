#include "skeinrep/io.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>

#include "skeinrep/errors.hpp"

namespace skeinrep {

int digits_from_env(int fallback) {
  const char* v = std::getenv("SKEINREP_DIGITS");
  if (!v || !*v) return fallback;
  try {
    size_t used = 0;
    int d = std::stoi(v, &used);
    if (used != std::string(v).size()) throw ParseError("");
    if (d < 10) throw DomainError("SKEINREP_DIGITS must be at least 10");
    return d;
  } catch (const std::logic_error&) {
    throw ParseError(std::string("bad SKEINREP_DIGITS value '") + v + "'");
  }
}

QPoint parse_point(const std::string& spec, int digits) {
  static const std::regex root(R"(root:(-?\d+)/(\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, root)) {
    const long k = std::stol(m[1]), two_r = std::stol(m[2]);
    if (two_r <= 0) throw ParseError("root denominator must be positive: " + spec);
    return QPoint::root(k, two_r, digits);
  }
  const auto comma = spec.find(',');
  const std::string re = spec.substr(0, comma);
  const std::string im = comma == std::string::npos ? "0" : spec.substr(comma + 1);
  return QPoint::numeric(PrecComplex::from_decimal(re, im, digits));
}

mpq_class parse_decimal(const std::string& text) {
  static const std::regex dec(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, dec) || (m[2].length() == 0 && m[3].length() == 0))
    throw ParseError("bad decimal '" + text + "'");
  const std::string digits = m[2].str() + m[3].str();
  mpz_class num(digits.empty() ? "0" : digits, 10);
  long exp10 = -static_cast<long>(m[3].length());
  if (m[4].matched) exp10 += std::stol(m[4]);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return m[1] == "-" ? mpq_class(-q) : q;
}

Coloring parse_coloring(const std::string& text) {
  static const std::regex list(R"(\d+(,\d+)*)");
  if (!std::regex_match(text, list)) throw ParseError("bad coloring '" + text + "'");
  Coloring c;
  size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(',', pos);
    c.push_back(std::stoi(text.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return c;
}

const std::vector<std::string>& builtin_class_names() {
  static const std::vector<std::string> names{
      "identity",          "torus_twist0",       "torus_twist1",       "torus_twist2",  "torus_involution",
      "sphere_half_twist0", "sphere_half_twist1", "sphere_half_twist2", "sphere_twist0", "sphere_twist1",
      "sphere_twist2"};
  return names;
}

MappingClass builtin_class(const std::string& name) {
  auto idx = [&](const std::string& prefix) { return name.size() == prefix.size() + 1 ? name.back() - '0' : -1; };
  if (name == "identity") return identity_class(punctured_torus());
  if (name == "torus_involution") return torus_elliptic_involution();
  if (name.rfind("torus_twist", 0) == 0) {
    const int k = idx("torus_twist");
    if (k >= 0 && k < 3) return torus_twist(k);
  }
  if (name.rfind("sphere_half_twist", 0) == 0) {
    const int k = idx("sphere_half_twist");
    if (k >= 0 && k < 3) return sphere_half_twist(sphere_curves()[static_cast<size_t>(k)]);
  }
  if (name.rfind("sphere_twist", 0) == 0) {
    const int k = idx("sphere_twist");
    if (k >= 0 && k < 3) return sphere_twist(sphere_curves()[static_cast<size_t>(k)]);
  }
  throw NotFoundError("unknown mapping class '" + name + "'");
}

MappingClass load_class(const std::string& name_or_path) {
  for (const auto& n : builtin_class_names())
    if (n == name_or_path) return builtin_class(n);
  std::ifstream in(name_or_path);
  if (!in) throw ParseError("cannot open mapping class file '" + name_or_path + "'");
  try {
    return mapping_class_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("mapping class file: ") + e.what());
  }
}

Triangulation builtin_surface(const std::string& name) {
  if (name == "torus1") return punctured_torus();
  if (name == "sphere4") return four_punctured_sphere();
  throw NotFoundError("unknown surface '" + name + "'");
}

namespace {

std::string fixed_digits(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  return x.to_string(digits);
}

}  // namespace

nlohmann::json complex_to_json(const PrecComplex& z, int digits) {
  return nlohmann::json::array({fixed_digits(z.re(), digits), fixed_digits(z.im(), digits)});
}

PrecComplex complex_from_json(const nlohmann::json& j, int digits) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError("complex entries are [re, im] decimal strings");
  return PrecComplex::from_decimal(j[0].get<std::string>(), j[1].get<std::string>(), digits);
}

nlohmann::json to_json(const RepMatrix& m, int digits) {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m.at(i, j), digits));
    rows.push_back(row);
  }
  nlohmann::json out;
  out["digits"] = digits;
  out["r"] = m.r;
  out["basis"] = m.basis;
  if (m.row_basis != m.basis) out["row_basis"] = m.row_basis;
  out["matrix"] = rows;
  return out;
}

RepMatrix rep_matrix_from_json(const nlohmann::json& j) {
  try {
    RepMatrix m;
    const int digits = j.at("digits").get<int>();
    m.r = j.at("r").get<int>();
    m.basis = j.at("basis").get<std::vector<Coloring>>();
    m.row_basis = j.contains("row_basis") ? j["row_basis"].get<std::vector<Coloring>>() : m.basis;
    const auto& rows = j.at("matrix");
    if (rows.size() != m.basis.size()) throw ParseError("matrix size does not match basis");
    for (const auto& row : rows) {
      if (row.size() != m.basis.size()) throw ParseError("matrix must be square");
      for (const auto& z : row) m.data.push_back(complex_from_json(z, digits));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace skeinrep
