#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "jordanlab/catalog.hpp"
#include "jordanlab/json_io.hpp"

using namespace jordanlab;

namespace {

const Field Q = Field::rationals();

bool same_algebra(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b) {
  if (a.name() != b.name() || a.dim() != b.dim() || a.field() != b.field()) return false;
  if (a.labels() != b.labels() || !vec_eq(a.unit(), b.unit())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!vec_eq(a.basis_product(i, j), b.basis_product(i, j))) return false;
    }
  }
  return true;
}

nlohmann::json minimal_doc() {
  return {{"name", "F"},
          {"dim", 1},
          {"field", {{"type", "rational"}}},
          {"labels", {"1"}},
          {"unit", {"1"}},
          {"table", {{{"i", 0}, {"j", 0}, {"k", 0}, {"c", "1"}}}}};
}

}  // namespace

TEST_CASE("catalog entries round-trip through JSON") {
  for (const std::string& name : verification_catalog_names()) {
    for (const Field& f : {Q, Field::prime(11)}) {
      StructureConstantAlgebra a = catalog_by_name(name, f).algebra;
      StructureConstantAlgebra b = algebra_from_json(algebra_to_json(a));
      CHECK(same_algebra(a, b));
      // byte-identical serialization after a round trip
      CHECK(algebra_to_json(a).dump() == algebra_to_json(b).dump());
    }
  }
}

TEST_CASE("file round-trip") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "jordanlab_t2.json";
  StructureConstantAlgebra a = upper_triangular(2, Q).algebra;
  save_algebra_file(a, path.string());
  StructureConstantAlgebra b = load_algebra_file(path.string());
  CHECK(same_algebra(a, b));
  fs::remove(path);
  CHECK_THROWS_AS(load_algebra_file(path.string()), InputError);
}

TEST_CASE("malformed documents are rejected with diagnostics") {
  CHECK_NOTHROW(algebra_from_json(minimal_doc()));

  nlohmann::json missing = minimal_doc();
  missing.erase("unit");
  CHECK_THROWS_WITH_AS(algebra_from_json(missing), "missing field 'unit'", InputError);

  nlohmann::json bad_index = minimal_doc();
  bad_index["table"][0]["k"] = 5;
  CHECK_THROWS_AS(algebra_from_json(bad_index), InputError);

  nlohmann::json bad_scalar = minimal_doc();
  bad_scalar["table"][0]["c"] = "x+y";
  CHECK_THROWS_AS(algebra_from_json(bad_scalar), InputError);

  nlohmann::json bad_dim = minimal_doc();
  bad_dim["dim"] = 0;
  CHECK_THROWS_AS(algebra_from_json(bad_dim), InputError);

  nlohmann::json bad_field = minimal_doc();
  bad_field["field"] = {{"type", "real"}};
  CHECK_THROWS_AS(algebra_from_json(bad_field), InputError);

  nlohmann::json char2 = minimal_doc();
  char2["field"] = {{"type", "prime"}, {"p", 2}};
  CHECK_THROWS_AS(algebra_from_json(char2), InputError);

  // An invalid table (broken unit axiom) is refused on load.
  nlohmann::json invalid = minimal_doc();
  invalid["table"][0]["c"] = "2';";
  CHECK_THROWS_AS(algebra_from_json(invalid), InputError);
  invalid["table"][0]["c"] = "2";
  CHECK_THROWS_AS(algebra_from_json(invalid), InputError);
}

TEST_CASE("dimension cap honours JORDANLAB_MAX_DIM") {
  CHECK(max_algebra_dim() == 32);
  setenv("JORDANLAB_MAX_DIM", "3", 1);
  CHECK(max_algebra_dim() == 3);
  StructureConstantAlgebra m2 = matrix_algebra(2, Q).algebra;  // dim 4 > 3
  CHECK_THROWS_AS(algebra_from_json(algebra_to_json(m2)), InputError);
  setenv("JORDANLAB_MAX_DIM", "junk", 1);
  CHECK_THROWS_AS(max_algebra_dim(), InputError);
  unsetenv("JORDANLAB_MAX_DIM");
  CHECK_NOTHROW(algebra_from_json(algebra_to_json(m2)));
}

TEST_CASE("prime-field documents") {
  StructureConstantAlgebra a = matrix_algebra(2, Field::prime(7)).algebra;
  nlohmann::json doc = algebra_to_json(a);
  CHECK(doc["field"]["p"] == 7);
  CHECK(same_algebra(a, algebra_from_json(doc)));
}

TEST_CASE("map documents") {
  StructureConstantAlgebra t2 = upper_triangular(2, Q).algebra;
  Matrix f = t2.jordan_mult(t2.basis_vector(1));
  nlohmann::json doc = map_to_json(f, t2);
  CHECK(map_from_json(doc, t2) == f);

  nlohmann::json wrong_ref = doc;
  wrong_ref["algebra"] = "M2";
  CHECK_THROWS_AS(map_from_json(wrong_ref, t2), InputError);

  nlohmann::json wrong_shape = doc;
  wrong_shape["matrix"].erase(0);
  CHECK_THROWS_AS(map_from_json(wrong_shape, t2), InputError);

  nlohmann::json bad_entry = doc;
  bad_entry["matrix"][0][0] = 17;  // numbers are not accepted, only strings
  CHECK_THROWS_AS(map_from_json(bad_entry, t2), InputError);
}
