#include "jordanlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace jordanlab {

StructureConstantAlgebra::StructureConstantAlgebra(std::string name, std::size_t dim,
                                                   const Field& field,
                                                   const std::vector<TableEntry>& table, Vec unit,
                                                   std::vector<std::string> labels)
    : name_(std::move(name)), dim_(dim), field_(field), unit_(std::move(unit)), labels_(std::move(labels)) {
  if (dim_ == 0) throw InputError("algebra dimension must be positive");
  if (unit_.size() != dim_) throw DimensionError("unit coordinate length mismatch");
  for (const Scalar& c : unit_) {
    if (c.field() != field_) throw FieldMismatchError("unit entry field mismatch");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw DimensionError("label count mismatch");

  std::vector<std::vector<Vec>> dense(dim_, std::vector<Vec>(dim_, zero_vec(dim_, field_)));
  for (const TableEntry& e : table) {
    if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_) {
      throw InputError("structure constant index out of range");
    }
    if (e.c.field() != field_) throw FieldMismatchError("structure constant field mismatch");
    dense[e.i][e.j][e.k] += e.c;
  }
  products_ = dense;
  table_.assign(dim_, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!dense[i][j][k].is_zero()) table_[i][j].emplace_back(k, dense[i][j][k]);
      }
    }
  }
}

const Vec& StructureConstantAlgebra::basis_product(std::size_t i, std::size_t j) const {
  return products_.at(i).at(j);
}

void StructureConstantAlgebra::check_element(const Vec& x) const {
  if (x.size() != dim_) {
    throw DimensionError("element has " + std::to_string(x.size()) + " coordinates, algebra " +
                         name_ + " has dimension " + std::to_string(dim_));
  }
}

Vec StructureConstantAlgebra::multiply(const Vec& x, const Vec& y) const {
  check_element(x);
  check_element(y);
  Vec r = zero_vec(dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar coeff = x[i] * y[j];
      for (const auto& [k, c] : table_[i][j]) r[k] += coeff * c;
    }
  }
  return r;
}

Vec StructureConstantAlgebra::jordan(const Vec& x, const Vec& y) const {
  return add(multiply(x, y), multiply(y, x));
}

Vec StructureConstantAlgebra::lie(const Vec& x, const Vec& y) const {
  return sub(multiply(x, y), multiply(y, x));
}

Matrix StructureConstantAlgebra::left_mult(const Vec& a) const {
  check_element(a);
  Matrix m(dim_, dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : table_[i][j]) m(k, j) += a[i] * c;
    }
  }
  return m;
}

Matrix StructureConstantAlgebra::right_mult(const Vec& a) const {
  check_element(a);
  Matrix m(dim_, dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (a[j].is_zero()) continue;
      for (const auto& [k, c] : table_[i][j]) m(k, i) += a[j] * c;
    }
  }
  return m;
}

Matrix StructureConstantAlgebra::jordan_mult(const Vec& a) const {
  return mat_add(left_mult(a), right_mult(a));
}

Matrix StructureConstantAlgebra::ad(const Vec& a) const {
  return mat_sub(left_mult(a), right_mult(a));
}

bool StructureConstantAlgebra::is_idempotent(const Vec& e) const {
  return vec_eq(multiply(e, e), e);
}

ValidationReport StructureConstantAlgebra::validate() const {
  ValidationReport rep;
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec ei = basis_vector(i);
    if (!vec_eq(multiply(unit_, ei), ei) || !vec_eq(multiply(ei, unit_), ei)) {
      rep.ok = false;
      rep.message = "unit axiom fails at basis element " + labels_[i];
      return rep;
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        Vec left = multiply(basis_product(i, j), basis_vector(k));
        Vec right = multiply(basis_vector(i), basis_product(j, k));
        if (!vec_eq(left, right)) {
          rep.ok = false;
          rep.triple = {i, j, k};
          rep.message = "associativity fails at (" + labels_[i] + ", " + labels_[j] + ", " +
                        labels_[k] + "): (ab)c = " + format_element(left) +
                        ", a(bc) = " + format_element(right);
          return rep;
        }
      }
    }
  }
  return rep;
}

std::string StructureConstantAlgebra::format_element(const Vec& x) const {
  check_element(x);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    if (!first) os << " + ";
    if (x[i].is_one()) {
      os << labels_[i];
    } else {
      os << x[i].str() << "*" << labels_[i];
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Idempotent::Idempotent(const StructureConstantAlgebra& a, Vec e) : coords_(std::move(e)) {
  if (!a.is_idempotent(coords_)) {
    throw InputError("element " + a.format_element(coords_) + " is not idempotent");
  }
}

bool Idempotent::nontrivial(const StructureConstantAlgebra& a) const {
  return !is_zero_vec(coords_) && !vec_eq(coords_, a.unit());
}

Subspace subalgebra_generated(const StructureConstantAlgebra& a, const std::vector<Vec>& gens,
                              bool include_unit) {
  if (gens.empty()) throw InputError("generator list is empty");
  std::vector<Vec> rows = gens;
  if (include_unit) rows.push_back(a.unit());
  Subspace s = Subspace::span(a.field(), a.dim(), rows);
  while (true) {
    std::vector<Vec> next;
    next.reserve(s.dim() * (s.dim() + 1));
    for (std::size_t i = 0; i < s.dim(); ++i) next.push_back(s.basis_row(i));
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        next.push_back(a.multiply(s.basis_row(i), s.basis_row(j)));
      }
    }
    Subspace grown = Subspace::span(a.field(), a.dim(), next);
    if (grown.dim() == s.dim()) return s;
    s = grown;
  }
}

PeirceDecomposition peirce(const StructureConstantAlgebra& a, const Idempotent& e) {
  const Vec& ev = e.coords();
  const Vec qv = sub(a.unit(), ev);
  auto corner = [&](const Vec& p, const Vec& q) {
    std::vector<Vec> images;
    images.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      images.push_back(a.multiply(p, a.multiply(a.basis_vector(i), q)));
    }
    return Subspace::span(a.field(), a.dim(), images);
  };
  return PeirceDecomposition{corner(ev, ev), corner(ev, qv), corner(qv, ev), corner(qv, qv)};
}

namespace {

// Offending corner elements: a in the (p.p)-corner with a * (p A q) = 0 and
// (q A p) * a = 0. The corner condition "a = p a p" is imposed as rows of
// I - L_p R_p.
Subspace condition3_offenders(const StructureConstantAlgebra& alg, const Vec& p,
                              const Subspace& paq, const Subspace& qap) {
  std::vector<Matrix> blocks;
  blocks.push_back(mat_sub(Matrix::identity(alg.dim(), alg.field()),
                           mat_mul(alg.left_mult(p), alg.right_mult(p))));
  for (std::size_t t = 0; t < paq.dim(); ++t) blocks.push_back(alg.right_mult(paq.basis_row(t)));
  for (std::size_t t = 0; t < qap.dim(); ++t) blocks.push_back(alg.left_mult(qap.basis_row(t)));
  return nullspace(vstack(blocks));
}

}  // namespace

bool check_condition_3(const StructureConstantAlgebra& a, const Idempotent& e) {
  if (!e.nontrivial(a)) throw InputError("condition requires a nontrivial idempotent");
  const Vec& p = e.coords();
  const Vec q = sub(a.unit(), p);
  PeirceDecomposition pd = peirce(a, e);
  // First corner: a in eAe killed by eAe^perp on the right, e^perp Ae on the left.
  Subspace w1 = condition3_offenders(a, p, pd.eq, pd.qe);
  // Second corner: b in e^perp Ae^perp with (eAe^perp) b = 0 and b (e^perp Ae) = 0.
  std::vector<Matrix> blocks;
  blocks.push_back(mat_sub(Matrix::identity(a.dim(), a.field()),
                           mat_mul(a.left_mult(q), a.right_mult(q))));
  for (std::size_t t = 0; t < pd.eq.dim(); ++t) blocks.push_back(a.left_mult(pd.eq.basis_row(t)));
  for (std::size_t t = 0; t < pd.qe.dim(); ++t) blocks.push_back(a.right_mult(pd.qe.basis_row(t)));
  Subspace w2 = nullspace(vstack(blocks));
  return w1.dim() == 0 && w2.dim() == 0;
}

StructureConstantAlgebra induced_subalgebra(const StructureConstantAlgebra& a, const Subspace& s,
                                            const std::string& name) {
  if (s.ambient_dim() != a.dim()) throw DimensionError("subspace ambient mismatch");
  if (!s.contains(a.unit())) throw InputError("subspace does not contain the unit");
  const std::size_t m = s.dim();
  std::vector<TableEntry> table;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vec prod = a.multiply(s.basis_row(i), s.basis_row(j));
      if (!s.contains(prod)) {
        throw InputError("subspace is not closed under multiplication");
      }
      Vec coords = s.coordinates_of(prod);
      for (std::size_t k = 0; k < m; ++k) {
        if (!coords[k].is_zero()) table.push_back({i, j, k, coords[k]});
      }
    }
  }
  Vec unit = s.coordinates_of(a.unit());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("s" + std::to_string(i));
  return StructureConstantAlgebra(name, m, a.field(), table, unit, labels);
}

}  // namespace jordanlab
