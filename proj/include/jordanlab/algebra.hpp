#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "jordanlab/linalg.hpp"

namespace jordanlab {

/// One nonzero structure constant: e_i * e_j contains c * e_k.
struct TableEntry {
  std::size_t i, j, k;
  Scalar c;
};

struct ValidationReport {
  bool ok = true;
  std::string message = "ok";
  /// (i, j, k) of the first associativity violation, when there is one.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triple;
};

/// A finite-dimensional unital associative algebra given on a basis
/// e_0, ..., e_{n-1} by its structure constants. Elements are coordinate
/// vectors (Vec) of length n. Immutable after construction.
class StructureConstantAlgebra {
 public:
  /// Duplicate (i,j,k) entries are accumulated. Indices are range-checked
  /// and entry fields must match `field`.
  StructureConstantAlgebra(std::string name, std::size_t dim, const Field& field,
                           const std::vector<TableEntry>& table, Vec unit,
                           std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec basis_vector(std::size_t i) const { return unit_vec(dim_, i, field_); }

  /// Coordinates of e_i * e_j.
  const Vec& basis_product(std::size_t i, std::size_t j) const;

  /// Sparse (k, c) pairs of e_i * e_j, as stored.
  const std::vector<std::pair<std::size_t, Scalar>>& table_at(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }

  Vec multiply(const Vec& x, const Vec& y) const;

  /// Jordan product x∘y = xy + yx.
  Vec jordan(const Vec& x, const Vec& y) const;

  /// Lie bracket [x, y] = xy - yx.
  Vec lie(const Vec& x, const Vec& y) const;

  /// Left multiplication operator L_a (column j = coordinates of a * e_j).
  Matrix left_mult(const Vec& a) const;

  /// Right multiplication operator R_a (column j = coordinates of e_j * a).
  Matrix right_mult(const Vec& a) const;

  /// Jordan multiplication operator x -> a∘x, i.e. L_a + R_a.
  Matrix jordan_mult(const Vec& a) const;

  /// Commutator operator x -> [a, x], i.e. L_a - R_a.
  Matrix ad(const Vec& a) const;

  bool is_idempotent(const Vec& e) const;

  /// Checks the unit axioms and associativity on all basis triples.
  /// Returns a structured report, never throws on a bad table.
  ValidationReport validate() const;

  /// Renders an element as a combination of basis labels, e.g. "e11 + 2*e12".
  std::string format_element(const Vec& x) const;

 private:
  void check_element(const Vec& x) const;

  std::string name_;
  std::size_t dim_;
  Field field_;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> table_;
  std::vector<std::vector<Vec>> products_;  // dense copies of basis products
  Vec unit_;
  std::vector<std::string> labels_;
};

/// Validated idempotent: e*e = e.
class Idempotent {
 public:
  Idempotent(const StructureConstantAlgebra& a, Vec e);

  const Vec& coords() const { return coords_; }

  /// e != 0 and e != 1.
  bool nontrivial(const StructureConstantAlgebra& a) const;

 private:
  Vec coords_;
};

/// Least subspace containing the generators (and the unit when requested)
/// that is closed under multiplication. Fixed-point iteration on the span;
/// stabilizes after at most dim(A) rounds.
Subspace subalgebra_generated(const StructureConstantAlgebra& a, const std::vector<Vec>& gens,
                              bool include_unit);

struct PeirceDecomposition {
  Subspace ee;  // eAe
  Subspace eq;  // eAe^perp
  Subspace qe;  // e^perp Ae
  Subspace qq;  // e^perp Ae^perp
};

PeirceDecomposition peirce(const StructureConstantAlgebra& a, const Idempotent& e);

/// The two-sided kill condition on the Peirce corners: elements of eAe
/// annihilated by eAe^perp on the right and by e^perp Ae on the left must be
/// zero, and symmetrically for e^perp Ae^perp. Both are nullspace
/// computations; returns true iff both offending spaces are {0}.
/// The idempotent must be nontrivial.
bool check_condition_3(const StructureConstantAlgebra& a, const Idempotent& e);

/// Structure constants induced on a subspace that contains the unit and is
/// closed under multiplication (errors otherwise). Basis = the canonical
/// basis of the subspace.
StructureConstantAlgebra induced_subalgebra(const StructureConstantAlgebra& a, const Subspace& s,
                                            const std::string& name);

}  // namespace jordanlab
