#include "jordanlab/json_io.hpp"

#include <cstdlib>
#include <fstream>

namespace jordanlab {

namespace {

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string require_string(const nlohmann::json& doc, const char* key) {
  const nlohmann::json& v = require(doc, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool is_nonneg_integer(const nlohmann::json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t require_index(const nlohmann::json& v, const char* what, std::size_t bound) {
  if (!is_nonneg_integer(v)) throw InputError(std::string(what) + " must be a nonnegative integer");
  std::size_t k = v.get<std::size_t>();
  if (k >= bound) {
    throw InputError(std::string(what) + " = " + std::to_string(k) + " out of range [0, " +
                     std::to_string(bound) + ")");
  }
  return k;
}

Field field_from_json(const nlohmann::json& doc) {
  const std::string type = require_string(doc, "type");
  if (type == "rational") return Field::rationals();
  if (type == "prime") {
    const nlohmann::json& p = require(doc, "p");
    if (!is_nonneg_integer(p)) throw InputError("field 'p' must be a positive integer");
    return Field::prime(p.get<std::uint64_t>());
  }
  throw InputError("field type must be 'rational' or 'prime', got '" + type + "'");
}

nlohmann::json field_to_json(const Field& f) {
  nlohmann::json j;
  if (f.is_rational()) {
    j["type"] = "rational";
  } else {
    j["type"] = "prime";
    j["p"] = f.modulus();
  }
  return j;
}

}  // namespace

std::size_t max_algebra_dim() {
  if (const char* env = std::getenv("JORDANLAB_MAX_DIM")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw InputError("JORDANLAB_MAX_DIM must be a positive integer");
  }
  return 32;
}

StructureConstantAlgebra algebra_from_json(const nlohmann::json& doc) {
  const std::string name = require_string(doc, "name");
  const nlohmann::json& dim_j = require(doc, "dim");
  if (!is_nonneg_integer(dim_j) || dim_j.get<std::size_t>() == 0) {
    throw InputError("'dim' must be a positive integer");
  }
  const std::size_t dim = dim_j.get<std::size_t>();
  if (dim > max_algebra_dim()) {
    throw InputError("algebra dimension " + std::to_string(dim) + " exceeds the cap of " +
                     std::to_string(max_algebra_dim()) + " (JORDANLAB_MAX_DIM)");
  }
  const Field field = field_from_json(require(doc, "field"));

  const nlohmann::json& labels_j = require(doc, "labels");
  if (!labels_j.is_array() || labels_j.size() != dim) {
    throw InputError("'labels' must be an array of dim strings");
  }
  std::vector<std::string> labels;
  for (const auto& l : labels_j) {
    if (!l.is_string()) throw InputError("'labels' entries must be strings");
    labels.push_back(l.get<std::string>());
  }

  const nlohmann::json& unit_j = require(doc, "unit");
  if (!unit_j.is_array() || unit_j.size() != dim) {
    throw InputError("'unit' must be an array of dim scalar strings");
  }
  Vec unit = zero_vec(dim, field);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!unit_j[i].is_string()) throw InputError("'unit' entries must be scalar strings");
    unit[i] = Scalar::parse(unit_j[i].get<std::string>(), field);
  }

  const nlohmann::json& table_j = require(doc, "table");
  if (!table_j.is_array()) throw InputError("'table' must be an array");
  std::vector<TableEntry> table;
  table.reserve(table_j.size());
  for (std::size_t t = 0; t < table_j.size(); ++t) {
    const nlohmann::json& e = table_j[t];
    const std::string at = "table[" + std::to_string(t) + "]";
    if (!e.is_object()) throw InputError(at + " must be an object");
    TableEntry entry{require_index(require(e, "i"), (at + ".i").c_str(), dim),
                     require_index(require(e, "j"), (at + ".j").c_str(), dim),
                     require_index(require(e, "k"), (at + ".k").c_str(), dim),
                     Scalar::zero(field)};
    const nlohmann::json& c = require(e, "c");
    if (!c.is_string()) throw InputError(at + ".c must be a scalar string");
    entry.c = Scalar::parse(c.get<std::string>(), field);
    table.push_back(std::move(entry));
  }

  StructureConstantAlgebra a(name, dim, field, table, unit, labels);
  ValidationReport rep = a.validate();
  if (!rep.ok) throw InputError("algebra '" + name + "' is invalid: " + rep.message);
  return a;
}

nlohmann::json algebra_to_json(const StructureConstantAlgebra& a) {
  nlohmann::json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["field"] = field_to_json(a.field());
  j["labels"] = a.labels();
  nlohmann::json unit = nlohmann::json::array();
  for (const Scalar& c : a.unit()) unit.push_back(c.str());
  j["unit"] = unit;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      for (const auto& [k, c] : a.table_at(i, jj)) {
        table.push_back({{"i", i}, {"j", jj}, {"k", k}, {"c", c.str()}});
      }
    }
  }
  j["table"] = table;
  return j;
}

StructureConstantAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
  return algebra_from_json(doc);
}

void save_algebra_file(const StructureConstantAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << algebra_to_json(a).dump(2) << "\n";
}

Matrix map_from_json(const nlohmann::json& doc, const StructureConstantAlgebra& a) {
  const std::string ref = require_string(doc, "algebra");
  if (ref != a.name()) {
    throw InputError("map document references algebra '" + ref + "', expected '" + a.name() + "'");
  }
  const nlohmann::json& rows = require(doc, "matrix");
  const std::size_t n = a.dim();
  if (!rows.is_array() || rows.size() != n) throw InputError("'matrix' must have dim rows");
  Matrix f(n, n, a.field());
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw InputError("matrix row " + std::to_string(r) + " must have dim entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!rows[r][c].is_string()) {
        throw InputError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") must be a scalar string");
      }
      f(r, c) = Scalar::parse(rows[r][c].get<std::string>(), a.field());
    }
  }
  return f;
}

nlohmann::json map_to_json(const Matrix& f, const StructureConstantAlgebra& a) {
  nlohmann::json j;
  j["algebra"] = a.name();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f(r, c).str());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

Matrix load_map_file(const std::string& path, const StructureConstantAlgebra& a) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
  return map_from_json(doc, a);
}

}  // namespace jordanlab
