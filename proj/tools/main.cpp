// jordanlab — exact computation of centralizer- and derivation-type map
// spaces of finite-dimensional unital algebras given by structure constants.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "jordanlab/catalog.hpp"
#include "jordanlab/centers.hpp"
#include "jordanlab/json_io.hpp"
#include "jordanlab/map_spaces.hpp"
#include "jordanlab/verify.hpp"

namespace {

using namespace jordanlab;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

Field parse_field_flag(const std::string& flag) {
  if (flag == "rational") return Field::rationals();
  if (flag.rfind("prime:", 0) == 0) {
    try {
      return Field::prime(std::stoull(flag.substr(6)));
    } catch (const std::logic_error&) {
      throw InputError("bad field spec '" + flag + "'");
    }
  }
  throw InputError("--field must be 'rational' or 'prime:p', got '" + flag + "'");
}

/// "--algebra catalog:NAME" or "--algebra path.json".
StructureConstantAlgebra load_algebra_spec(const std::string& spec, const std::string& field_flag) {
  if (spec.rfind("catalog:", 0) == 0) {
    Field f = field_flag.empty() ? Field::rationals() : parse_field_flag(field_flag);
    CatalogEntry e = catalog_by_name(spec.substr(8), f);
    if (e.algebra.dim() > max_algebra_dim()) {
      throw InputError("algebra dimension " + std::to_string(e.algebra.dim()) +
                       " exceeds the cap of " + std::to_string(max_algebra_dim()) +
                       " (JORDANLAB_MAX_DIM)");
    }
    ValidationReport rep = e.algebra.validate();
    if (!rep.ok) throw Error("catalog algebra failed validation: " + rep.message);
    return e.algebra;
  }
  if (!field_flag.empty()) {
    throw InputError("--field applies to catalog algebras; files carry their own field");
  }
  return load_algebra_file(spec);
}

void print_basis_maps(const StructureConstantAlgebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Matrix f = map_of_vec(s.basis_row(r), a.dim());
    std::cout << "  basis map " << r << ":\n";
    for (std::size_t row = 0; row < a.dim(); ++row) {
      std::cout << "    [";
      for (std::size_t col = 0; col < a.dim(); ++col) {
        if (col) std::cout << ", ";
        std::cout << f(row, col).str();
      }
      std::cout << "]\n";
    }
  }
}

int cmd_spaces(const std::string& algebra_spec, const std::string& field_flag, bool bases,
               bool as_json) {
  StructureConstantAlgebra a = load_algebra_spec(algebra_spec, field_flag);
  const std::vector<MapSpace> spaces = {cent_space(a),  jcent_space(a), qjcent_space(a),
                                        der_space(a),   jder_space(a),  qjder_space(a),
                                        gjder_space(a), fgder_space(a)};
  if (as_json) {
    nlohmann::json j;
    j["algebra"] = a.name();
    j["dim"] = a.dim();
    j["field"] = a.field().str();
    nlohmann::json dims;
    for (const MapSpace& s : spaces) dims[map_kind_name(s.kind)] = s.space.dim();
    j["dims"] = dims;
    if (bases) {
      nlohmann::json all;
      for (const MapSpace& s : spaces) {
        nlohmann::json list = nlohmann::json::array();
        for (std::size_t r = 0; r < s.space.dim(); ++r) {
          list.push_back(map_to_json(map_of_vec(s.space.basis_row(r), a.dim()), a)["matrix"]);
        }
        all[map_kind_name(s.kind)] = list;
      }
      j["bases"] = all;
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "algebra " << a.name() << " (dim " << a.dim() << " over " << a.field().str()
            << ")\n";
  for (const MapSpace& s : spaces) {
    std::cout << "  " << map_kind_name(s.kind) << ": dim " << s.space.dim() << "\n";
    if (bases) print_basis_maps(a, s.space);
  }
  return kExitPass;
}

int cmd_centers(const std::string& algebra_spec, const std::string& field_flag, bool bases,
                bool as_json) {
  StructureConstantAlgebra a = load_algebra_spec(algebra_spec, field_flag);
  CenterChain chain = center_chain(a);
  std::optional<bool> semiprime;
  if (a.field().is_rational()) semiprime = is_semiprime_char0(a);

  auto basis_strings = [&](const Subspace& s) {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) list.push_back(a.format_element(s.basis_row(r)));
    return list;
  };
  if (as_json) {
    nlohmann::json j;
    j["algebra"] = a.name();
    j["dims"] = {{"Z", chain.z.dim()}, {"ZJ", chain.z_j.dim()}, {"ZQ", chain.z_q.dim()}};
    if (bases) {
      j["bases"] = {{"Z", basis_strings(chain.z)},
                    {"ZJ", basis_strings(chain.z_j)},
                    {"ZQ", basis_strings(chain.z_q)}};
    }
    if (semiprime) j["semiprime"] = *semiprime;
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "algebra " << a.name() << " (dim " << a.dim() << " over " << a.field().str()
            << ")\n";
  auto show = [&](const char* label, const Subspace& s) {
    std::cout << "  " << label << ": dim " << s.dim() << "\n";
    if (bases) {
      for (std::size_t r = 0; r < s.dim(); ++r) {
        std::cout << "    " << a.format_element(s.basis_row(r)) << "\n";
      }
    }
  };
  show("Z  ", chain.z);
  show("Z_J", chain.z_j);
  show("Z_Q", chain.z_q);
  if (semiprime) std::cout << "  semiprime: " << (*semiprime ? "yes" : "no") << "\n";
  return kExitPass;
}

int cmd_decompose(const std::string& algebra_spec, const std::string& field_flag,
                  const std::string& map_path, bool as_json) {
  StructureConstantAlgebra a = load_algebra_spec(algebra_spec, field_flag);
  Matrix f = load_map_file(map_path, a);
  try {
    GJDecomposition d = decompose_gjder(a, f);
    if (as_json) {
      nlohmann::json j;
      j["algebra"] = a.name();
      j["member"] = true;
      j["f1_qjder"] = map_to_json(d.f1, a)["matrix"];
      j["f2_qjcent"] = map_to_json(d.f2, a)["matrix"];
      j["witness_g"] = map_to_json(d.g, a)["matrix"];
      j["witness_h"] = map_to_json(d.h, a)["matrix"];
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "f is a generalized Jordan derivation of " << a.name() << "\n";
      auto show = [&](const char* label, const Matrix& m) {
        std::cout << "  " << label << ":\n";
        for (std::size_t r = 0; r < m.rows(); ++r) {
          std::cout << "    [";
          for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) std::cout << ", ";
            std::cout << m(r, c).str();
          }
          std::cout << "]\n";
        }
      };
      show("f1 (quasi Jordan derivation part)", d.f1);
      show("f2 (quasi Jordan centralizer part)", d.f2);
      show("witness g", d.g);
      show("witness h", d.h);
    }
    return kExitPass;
  } catch (const MembershipError& e) {
    if (as_json) {
      nlohmann::json j;
      j["algebra"] = a.name();
      j["member"] = false;
      j["violated_pair"] = {e.basis_i, e.basis_j};
      j["lhs"] = e.lhs_value;
      j["rhs"] = e.rhs_value;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << e.what() << "\n";
    }
    return kExitCheckFailure;
  }
}

int cmd_classify(const std::string& algebra_spec, const std::string& field_flag,
                 const std::string& map_path, bool as_json) {
  StructureConstantAlgebra a = load_algebra_spec(algebra_spec, field_flag);
  Matrix f = load_map_file(map_path, a);
  try {
    QJDerClassification cls = classify_qjder(a, f);
    if (as_json) {
      nlohmann::json j;
      j["algebra"] = a.name();
      j["member"] = true;
      j["alpha"] = a.format_element(cls.alpha);
      j["split"] = cls.split;
      if (cls.split) {
        j["jcent_part"] = map_to_json(*cls.jcent_part, a)["matrix"];
        j["jder_part"] = map_to_json(*cls.jder_part, a)["matrix"];
      } else {
        j["obstruction_pair"] = {cls.obstruction->first, cls.obstruction->second};
        j["obstruction_value"] = a.format_element(cls.obstruction_value);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "f is a quasi Jordan derivation of " << a.name() << "\n";
      std::cout << "  alpha = f(1)/2 = " << a.format_element(cls.alpha) << "\n";
      if (cls.split) {
        std::cout << "  split: f = (alpha∘-) + d with d a Jordan derivation\n";
      } else {
        std::cout << "  obstructed: alpha ∉ Z_J; [[alpha, " << a.labels()[cls.obstruction->first]
                  << "], " << a.labels()[cls.obstruction->second]
                  << "] = " << a.format_element(cls.obstruction_value) << "\n";
      }
    }
    return kExitPass;
  } catch (const MembershipError& e) {
    if (as_json) {
      nlohmann::json j;
      j["algebra"] = a.name();
      j["member"] = false;
      j["violated_pair"] = {e.basis_i, e.basis_j};
      j["lhs"] = e.lhs_value;
      j["rhs"] = e.rhs_value;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << e.what() << "\n";
    }
    return kExitCheckFailure;
  }
}

int cmd_verify(const std::vector<std::string>& ids, bool as_json) {
  std::vector<std::string> selected;
  for (const std::string& id : ids) {
    if (id == "all") continue;
    selected.push_back(id);
  }
  VerificationReport rep = run_verification(selected);
  if (as_json) {
    std::cout << report_json(rep).dump(2) << "\n";
  } else {
    std::cout << report_table(rep);
  }
  return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_export(const std::string& algebra_spec, const std::string& field_flag,
               const std::string& out_path) {
  StructureConstantAlgebra a = load_algebra_spec(algebra_spec, field_flag);
  save_algebra_file(a, out_path);
  std::cout << "wrote " << out_path << "\n";
  return kExitPass;
}

int cmd_catalog() {
  for (const std::string& name : verification_catalog_names()) {
    CatalogEntry e = catalog_by_name(name, Field::rationals());
    std::cout << name << ": dim " << e.algebra.dim();
    if (!e.notes.empty()) std::cout << " — " << e.notes;
    std::cout << "\n";
  }
  std::cout << "also available: F, M<n>, T<n>, block:a,b,...\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact map-space and center computations for structure-constant algebras"};
  app.require_subcommand(1);

  std::string algebra_spec, field_flag, map_path, out_path;
  bool bases = false, as_json = false;
  std::vector<std::string> check_ids;

  auto add_algebra_opts = [&](CLI::App* cmd, bool with_map) {
    cmd->add_option("--algebra", algebra_spec, "algebra file or catalog:NAME")->required();
    cmd->add_option("--field", field_flag, "rational | prime:p (catalog algebras only)");
    if (with_map) cmd->add_option("--map", map_path, "map document (JSON)")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* spaces = app.add_subcommand("spaces", "dimensions (and bases) of all map spaces");
  add_algebra_opts(spaces, false);
  spaces->add_flag("--bases", bases, "print canonical bases");

  CLI::App* centers = app.add_subcommand("centers", "Z, Z_J, Z_Q and the semiprime verdict");
  add_algebra_opts(centers, false);
  centers->add_flag("--bases", bases, "print canonical bases");

  CLI::App* decompose =
      app.add_subcommand("decompose", "split a generalized Jordan derivation as f1 + f2");
  add_algebra_opts(decompose, true);

  CLI::App* classify =
      app.add_subcommand("classify", "split or obstruct a quasi Jordan derivation");
  add_algebra_opts(classify, true);

  CLI::App* verify = app.add_subcommand("verify", "run the named verification checks");
  verify->add_option("--check", check_ids, "check id (repeatable) or 'all'; default all");
  verify->add_flag("--json", as_json, "machine-readable output");

  CLI::App* exp = app.add_subcommand("export", "write a catalog algebra as a JSON document");
  exp->add_option("--algebra", algebra_spec, "algebra file or catalog:NAME")->required();
  exp->add_option("--field", field_flag, "rational | prime:p");
  exp->add_option("-o,--out", out_path, "output path")->required();

  app.add_subcommand("catalog", "list built-in algebras");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spaces->parsed()) return cmd_spaces(algebra_spec, field_flag, bases, as_json);
    if (centers->parsed()) return cmd_centers(algebra_spec, field_flag, bases, as_json);
    if (decompose->parsed()) return cmd_decompose(algebra_spec, field_flag, map_path, as_json);
    if (classify->parsed()) return cmd_classify(algebra_spec, field_flag, map_path, as_json);
    if (verify->parsed()) return cmd_verify(check_ids, as_json);
    if (exp->parsed()) return cmd_export(algebra_spec, field_flag, out_path);
    return cmd_catalog();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
