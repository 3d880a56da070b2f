#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordanlab/algebra.hpp"

namespace jordanlab {

/// A built-in algebra together with its frozen expected quantities
/// (dimensions of centers and map spaces where known) and structural
/// witnesses used by the verification suite.
struct CatalogEntry {
  StructureConstantAlgebra algebra;
  std::map<std::string, std::size_t> expected_dims;
  std::map<std::string, std::vector<Vec>> expected_bases;
  /// Idempotents that generate the whole algebra, when we supply them.
  std::vector<Vec> idempotent_generators;
  /// A nontrivial idempotent expected to satisfy the Peirce kill condition.
  std::optional<Vec> condition3_idempotent;
  bool triangular = false;
  std::optional<bool> semiprime;
  std::string notes;
};

/// Full matrix algebra M_n, basis e_ij in row-major order.
CatalogEntry matrix_algebra(std::size_t n, const Field& f);

/// Upper triangular matrices T_n, basis e_ij for i <= j in row-major order.
CatalogEntry upper_triangular(std::size_t n, const Field& f);

/// Block upper triangular matrices for the given diagonal block sizes.
CatalogEntry block_upper_triangular(const std::vector<std::size_t>& blocks, const Field& f);

/// Dimension-4 subalgebra of T_3 spanned by {1, e12, e23, e13}; satisfies
/// the polynomial identity [[x, y], z] = 0.
CatalogEntry grassmann3(const Field& f);

/// Dimension-6 subalgebra of M_4 spanned by {1, e12+e34, e13, e24, e14, e23}.
CatalogEntry primer_algebra(const Field& f);

/// External direct sum; structure constants are block diagonal.
CatalogEntry direct_sum(const std::vector<CatalogEntry>& parts, const std::string& name);

/// The obstructed quasi Jordan derivation example on the primer algebra over
/// the rationals: f maps r*1 + ... to 2r*e23 and h maps it to
/// s*e13 + 4r*e23 + s*e24 (coordinates r, s of 1 and e12+e34).
std::pair<Matrix, Matrix> section4_example_maps();

/// Lookup by name: "F", "M<n>", "T<n>", "block:a,b,...", "grassmann3",
/// "primer". Throws InputError for unknown names.
CatalogEntry catalog_by_name(const std::string& name, const Field& f);

/// The fixed entry list exercised by the verification suite.
const std::vector<std::string>& verification_catalog_names();

}  // namespace jordanlab
