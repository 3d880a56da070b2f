#include "jordanlab/linalg.hpp"

#include <sstream>

namespace jordanlab {

namespace {

void check_same_length(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, const Field& f) {
  Vec v = zero_vec(n, f);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const Scalar& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  check_same_length(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  check_same_length(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& v, const Scalar& c) {
  Vec r = v;
  for (Scalar& x : r) x *= c;
  return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.field() != field_) {
    throw FieldMismatchError("entry field " + v.field().str() + " differs from matrix field " +
                             field_.str());
  }
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  data_[r * cols_ + c] = v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != o.data_[i]) return false;
  }
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatchError("matrix fields differ");
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix r(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec r = zero_vec(a.rows(), a.field());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Scalar& aic = a(i, c);
      if (aic.is_zero()) continue;
      r[i] += aic * x[c];
    }
  }
  return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  }
  return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix diff shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  }
  return r;
}

Matrix mat_scale(const Matrix& a, const Scalar& c) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
  }
  return r;
}

bool is_zero_mat(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw DimensionError("vstack of nothing");
  std::size_t total = 0;
  for (const Matrix& p : parts) {
    if (p.cols() != parts.front().cols()) throw DimensionError("vstack column mismatch");
    if (p.field() != parts.front().field()) throw FieldMismatchError("vstack field mismatch");
    total += p.rows();
  }
  Matrix r(total, parts.front().cols(), parts.front().field());
  std::size_t at = 0;
  for (const Matrix& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i, ++at) {
      for (std::size_t j = 0; j < p.cols(); ++j) r(at, j) = p(i, j);
    }
  }
  return r;
}

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols && lead_row < rows; ++col) {
    std::size_t piv = lead_row;
    while (piv < rows && m(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead_row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(m(piv, j), m(lead_row, j));
    }
    const Scalar inv = m(lead_row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) {
      if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead_row) continue;
      const Scalar factor = m(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < cols; ++j) {
        if (!m(lead_row, j).is_zero()) m(i, j) -= factor * m(lead_row, j);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix rows(vectors.size(), ambient, f);
  for (std::size_t i = 0; i < vectors.size(); ++i) rows.set_row(i, vectors[i]);
  return span_rows(rows);
}

Subspace Subspace::span_rows(const Matrix& rows) {
  RrefResult r = rref(rows);
  Matrix basis(r.rank(), rows.cols(), rows.field());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = r.mat(i, j);
  }
  return Subspace(rows.field(), rows.cols(), std::move(basis), std::move(r.pivot_cols));
}

Subspace Subspace::zero_space(const Field& f, std::size_t ambient) {
  return Subspace(f, ambient, Matrix(0, ambient, f), {});
}

Subspace Subspace::full_space(const Field& f, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(f, ambient, Matrix::identity(ambient, f), std::move(pivots));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("ambient dimension mismatch");
  if (!v.empty() && v.front().field() != field_) throw FieldMismatchError("vector field mismatch");
  Vec rem = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar coeff = rem[pivots_[r]];
    if (coeff.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_(r, j).is_zero()) rem[j] -= coeff * basis_(r, j);
    }
  }
  return is_zero_vec(rem);
}

Vec Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("ambient dimension mismatch");
  Vec rem = v;
  Vec coords = zero_vec(dim(), field_);
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar coeff = rem[pivots_[r]];
    coords[r] = coeff;
    if (coeff.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_(r, j).is_zero()) rem[j] -= coeff * basis_(r, j);
    }
  }
  if (!is_zero_vec(rem)) throw DimensionError("vector not contained in subspace");
  return coords;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

  std::vector<Vec> kernel;
  kernel.reserve(n - r.rank());
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = zero_vec(n, m.field());
    v[free_col] = Scalar::one(m.field());
    for (std::size_t row = 0; row < r.rank(); ++row) {
      const Scalar& entry = r.mat(row, free_col);
      if (!entry.is_zero()) v[r.pivot_cols[row]] = -entry;
    }
    kernel.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, kernel);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  if (u.field() != v.field()) throw FieldMismatchError("subspace field mismatch");
  std::vector<Vec> rows;
  rows.reserve(u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(u.basis_row(i));
  for (std::size_t i = 0; i < v.dim(); ++i) rows.push_back(v.basis_row(i));
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  if (u.field() != v.field()) throw FieldMismatchError("subspace field mismatch");
  const std::size_t m = u.ambient_dim();
  const std::size_t k = u.dim(), l = v.dim();
  // Columns are the U basis vectors followed by the negated V basis vectors;
  // a kernel element (a, b) encodes sum_i a_i u_i = sum_j b_j v_j.
  Matrix combined(m, k + l, u.field());
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t r = 0; r < m; ++r) combined(r, a) = u.basis()(a, r);
  }
  for (std::size_t b = 0; b < l; ++b) {
    for (std::size_t r = 0; r < m; ++r) combined(r, k + b) = -v.basis()(b, r);
  }
  Subspace ker = nullspace(combined);
  std::vector<Vec> elems;
  elems.reserve(ker.dim());
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec coeffs = ker.basis_row(i);
    Vec w = zero_vec(m, u.field());
    for (std::size_t a = 0; a < k; ++a) {
      if (coeffs[a].is_zero()) continue;
      for (std::size_t r = 0; r < m; ++r) {
        if (!u.basis()(a, r).is_zero()) w[r] += coeffs[a] * u.basis()(a, r);
      }
    }
    elems.push_back(std::move(w));
  }
  return Subspace::span(u.field(), m, elems);
}

bool subspace_leq(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (!v.contains(u.basis_row(i))) return false;
  }
  return true;
}

Subspace project_columns(const Subspace& s, std::size_t begin, std::size_t end) {
  if (begin >= end || end > s.ambient_dim()) throw InputError("invalid projection block");
  std::vector<Vec> rows;
  rows.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec full = s.basis_row(i);
    rows.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(begin),
                      full.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return Subspace::span(s.field(), end - begin, rows);
}

Subspace solve_and_project(const Matrix& m, std::size_t begin, std::size_t end) {
  if (begin >= end || end > m.cols()) throw InputError("invalid projection block");
  return project_columns(nullspace(m), begin, end);
}

LinearSolve solve_linear(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  RrefResult r = rref(std::move(aug));
  LinearSolve out{true, zero_vec(m.cols(), m.field())};
  for (std::size_t row = 0; row < r.rank(); ++row) {
    if (r.pivot_cols[row] == m.cols()) {
      out.consistent = false;  // pivot in the augmented column
      continue;
    }
    out.particular[r.pivot_cols[row]] = r.mat(row, m.cols());
  }
  return out;
}

}  // namespace jordanlab
