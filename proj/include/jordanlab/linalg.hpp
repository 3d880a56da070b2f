#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jordanlab/scalar.hpp"

namespace jordanlab {

/// Coordinate vector; all entries must come from one field.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field& f);
Vec unit_vec(std::size_t n, std::size_t i, const Field& f);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& c);
bool vec_eq(const Vec& a, const Vec& b);
std::string format_vec(const Vec& v);

/// Dense matrix over a single field. Row-major storage.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field& f);

  static Matrix identity(std::size_t n, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Field-checked write; use for externally supplied values.
  void set(std::size_t r, std::size_t c, const Scalar& v);

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& a, const Vec& x);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& c);
bool is_zero_mat(const Matrix& a);

/// Stack matrices with equal column counts on top of each other.
Matrix vstack(const std::vector<Matrix>& parts);

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Unique reduced row-echelon form. Deterministic: columns are processed left
/// to right and the topmost available row is chosen as pivot.
RrefResult rref(Matrix m);

/// A subspace of F^m held by its canonical basis: the RREF of any spanning
/// set, zero rows dropped. Two subspaces are equal as sets iff their stored
/// bases are identical entry-wise.
class Subspace {
 public:
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span_rows(const Matrix& rows);
  static Subspace zero_space(const Field& f, std::size_t ambient);
  static Subspace full_space(const Field& f, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t r) const { return basis_.row(r); }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool contains(const Vec& v) const;

  /// Coefficients of v in the stored basis; throws DimensionError if v is
  /// not contained.
  Vec coordinates_of(const Vec& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(const Field& f, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), field_(f), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_;
  Field field_;
  Matrix basis_;  // dim x ambient, canonical RREF
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : Mv = 0}; dim = cols - rank.
Subspace nullspace(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Kernel method: stack the two bases as columns, compute the kernel of the
/// combined matrix and recombine into elements of U.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

bool subspace_leq(const Subspace& u, const Subspace& v);

/// Restriction of a subspace to the coordinate block [begin, end).
Subspace project_columns(const Subspace& s, std::size_t begin, std::size_t end);

/// { v|_[begin,end) : Mv = 0 } — existential elimination of the coordinates
/// outside the block.
Subspace solve_and_project(const Matrix& m, std::size_t begin, std::size_t end);

struct LinearSolve {
  bool consistent;
  /// Pivot variables from the RREF, free variables zero. When the system is
  /// inconsistent this is the same assignment with the contradictory rows
  /// ignored (best effort, used for diagnostics).
  Vec particular;
};

/// Solve Mx = rhs exactly.
LinearSolve solve_linear(const Matrix& m, const Vec& rhs);

}  // namespace jordanlab
