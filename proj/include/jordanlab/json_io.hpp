#pragma once

#include <json.hpp>

#include "jordanlab/algebra.hpp"

namespace jordanlab {

/// Dimension cap for algebras built through the document interface;
/// JORDANLAB_MAX_DIM overrides the default of 32.
std::size_t max_algebra_dim();

/// Algebra document schema:
///   {
///     "name":   string,
///     "dim":    integer,
///     "field":  {"type": "rational"} | {"type": "prime", "p": odd prime},
///     "labels": [string, ...],                     (dim entries)
///     "unit":   ["p/q", ...],                      (dim entries)
///     "table":  [{"i": 0, "j": 0, "k": 0, "c": "p/q"}, ...]
///   }
/// Indices are 0-based; scalars are decimal strings "n" or "n/d".
/// The loaded algebra is validated (unit axioms, associativity).
StructureConstantAlgebra algebra_from_json(const nlohmann::json& doc);
nlohmann::json algebra_to_json(const StructureConstantAlgebra& a);

StructureConstantAlgebra load_algebra_file(const std::string& path);
void save_algebra_file(const StructureConstantAlgebra& a, const std::string& path);

/// Map document schema:
///   {"algebra": name, "matrix": [[...], ...]}
/// where matrix is an n x n array of scalar strings and column j is the
/// image of basis vector j (row r, column c = coefficient of e_r in f(e_c)).
Matrix map_from_json(const nlohmann::json& doc, const StructureConstantAlgebra& a);
nlohmann::json map_to_json(const Matrix& f, const StructureConstantAlgebra& a);

Matrix load_map_file(const std::string& path, const StructureConstantAlgebra& a);

}  // namespace jordanlab
