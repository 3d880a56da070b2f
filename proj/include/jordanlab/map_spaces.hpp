#pragma once

#include <optional>
#include <utility>

#include "jordanlab/algebra.hpp"

namespace jordanlab {

/// Linear maps A -> A are n x n matrices acting on coordinate vectors;
/// column j holds the image of basis vector e_j. Spaces of maps live in
/// F^{n^2} under the column-stacked vectorization: entry (r, c) of the map
/// matrix sits at position c*n + r.
Vec vec_of_map(const Matrix& f);
Matrix map_of_vec(const Vec& v, std::size_t n);

enum class MapKind { Cent, JCent, QJCent, Der, JDer, QJDer, GJDer, FGDer };

const char* map_kind_name(MapKind k);

struct MapSpace {
  MapKind kind;
  Subspace space;  // ambient n^2
};

/// d(xy) = d(x)y + x d(y).
MapSpace der_space(const StructureConstantAlgebra& a);

/// d(x∘y) = d(x)∘y + x∘d(y).
MapSpace jder_space(const StructureConstantAlgebra& a);

/// f(xy) = f(x)y = x f(y).
MapSpace cent_space(const StructureConstantAlgebra& a);

/// f(x∘y) = f(x)∘y.
MapSpace jcent_space(const StructureConstantAlgebra& a);

/// f(x)∘y = x∘f(y).
MapSpace qjcent_space(const StructureConstantAlgebra& a);

/// Quasi Jordan derivations, as the linear condition
/// f(x)∘y + x∘f(y) = f(x∘y) + α∘(x∘y) with α = f(1)/2.
MapSpace qjder_space(const StructureConstantAlgebra& a);

/// Generalized Jordan derivations: maps f such that some (g, h) satisfy
/// f(x)∘y + x∘g(y) = h(x∘y). Computed by projecting the solution space of
/// the joint (f, g, h) system onto the f block.
MapSpace gjder_space(const StructureConstantAlgebra& a);

/// The h-maps of the same joint system (the "Jordan {f,g}-derivations").
MapSpace fgder_space(const StructureConstantAlgebra& a);

/// Existential formulation of quasi Jordan derivations: project the (f, h)
/// system f(x)∘y + x∘f(y) = h(x∘y) onto f. Must agree with qjder_space;
/// retained as an independent oracle.
Subspace qjder_space_existential(const StructureConstantAlgebra& a);

/// The joint constraint system for f(x)∘y + x∘g(y) = h(x∘y) over blocks
/// (f, g, h), rows grouped per basis pair (i, j) in lexicographic order.
Matrix gjder_system(const StructureConstantAlgebra& a);

/// First basis pair (i, j) violating f(e_i)∘e_j + e_i∘g(e_j) = h(e_i∘e_j),
/// together with both sides, or nullopt if none.
struct PairViolation {
  std::size_t i, j;
  Vec lhs, rhs;
};
std::optional<PairViolation> first_gjd_violation(const StructureConstantAlgebra& a, const Matrix& f,
                                                 const Matrix& g, const Matrix& h);

struct GJDecomposition {
  Matrix f1;  // quasi Jordan derivation part, (f + g)/2
  Matrix f2;  // quasi Jordan centralizer part, (f - g)/2
  Matrix g;   // witness
  Matrix h;   // witness
};

/// Splits f = f1 + f2 along a witness pair (g, h) found by solving the joint
/// system with f fixed; free parameters are set to zero, so the result is
/// deterministic. Throws MembershipError when f is not a generalized Jordan
/// derivation.
GJDecomposition decompose_gjder(const StructureConstantAlgebra& a, const Matrix& f);

struct QJDerClassification {
  Vec alpha;  // f(1)/2
  bool split;
  /// Split case: f = jcent_part + jder_part with jcent_part = α∘-.
  std::optional<Matrix> jcent_part;
  std::optional<Matrix> jder_part;
  /// Obstructed case: basis pair with [[α, e_i], e_j] != 0 and that value.
  std::optional<std::pair<std::size_t, std::size_t>> obstruction;
  Vec obstruction_value;
};

/// Splits f in QJDer into a Jordan centralizer plus a Jordan derivation when
/// f(1) lies in Z_J, or certifies the obstruction. Throws MembershipError
/// when f is not a quasi Jordan derivation.
QJDerClassification classify_qjder(const StructureConstantAlgebra& a, const Matrix& f);

/// For f in QJCent returns α = f(1)/2, asserting f = α∘- and α in Z_Q.
Vec extract_alpha(const StructureConstantAlgebra& a, const Matrix& f);

}  // namespace jordanlab
