#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skeinrep/qlaurent.hpp"
#include "skeinrep/rep.hpp"

namespace skeinrep {

/// Precision from SKEINREP_DIGITS, or `fallback` when unset.
int digits_from_env(int fallback = PrecComplex::kDefaultDigits);

/// "re", "re,im" (decimal) or "root:k/2r" for exp(i pi k / 2r).
QPoint parse_point(const std::string& spec, int digits);
/// Exact value of a decimal literal such as -1.25e-3.
mpq_class parse_decimal(const std::string& text);
/// Comma separated nonnegative integers.
Coloring parse_coloring(const std::string& text);

/// Named mapping classes: identity, torus_twist{0,1,2}, torus_involution,
/// sphere_half_twist{0,1,2}, sphere_twist{0,1,2}.
MappingClass builtin_class(const std::string& name);
const std::vector<std::string>& builtin_class_names();
/// Builtin name or path to a mapping-class JSON file.
MappingClass load_class(const std::string& name_or_path);
Triangulation builtin_surface(const std::string& name);

nlohmann::json complex_to_json(const PrecComplex& z, int digits);
PrecComplex complex_from_json(const nlohmann::json& j, int digits);
nlohmann::json to_json(const RepMatrix& m, int digits);
RepMatrix rep_matrix_from_json(const nlohmann::json& j);

}  // namespace skeinrep
