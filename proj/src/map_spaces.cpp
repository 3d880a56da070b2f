#include "jordanlab/map_spaces.hpp"

#include "jordanlab/centers.hpp"

namespace jordanlab {

Vec vec_of_map(const Matrix& f) {
  Vec v = zero_vec(f.rows() * f.cols(), f.field());
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (std::size_t r = 0; r < f.rows(); ++r) v[c * f.rows() + r] = f(r, c);
  }
  return v;
}

Matrix map_of_vec(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw DimensionError("vectorized map has wrong length");
  Matrix f(n, n, v.empty() ? Field::rationals() : v.front().field());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) f(r, c) = v[c * n + r];
  }
  return f;
}

const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::Cent: return "Cent";
    case MapKind::JCent: return "JCent";
    case MapKind::QJCent: return "QJCent";
    case MapKind::Der: return "Der";
    case MapKind::JDer: return "JDer";
    case MapKind::QJDer: return "QJDer";
    case MapKind::GJDer: return "GJDer";
    case MapKind::FGDer: return "FGDer";
  }
  return "?";
}

namespace {

// Assembles homogeneous constraints that are linear in one or more unknown
// maps. Unknowns are blocks of n^2 columns (column-stacked maps); every
// group contributes n rows, one per coordinate of the constraint value.
class SystemBuilder {
 public:
  SystemBuilder(const StructureConstantAlgebra& a, std::size_t blocks, std::size_t groups)
      : n_(a.dim()), mat_(groups * a.dim(), blocks * a.dim() * a.dim(), a.field()), group_(0) {}

  void next_group() { ++group_; }

  // coeff * C * (X_block applied to e_basis)
  void basis_term(std::size_t block, const Matrix& c, std::size_t basis, const Scalar& coeff) {
    const std::size_t row0 = (group_ - 1) * n_;
    const std::size_t col0 = block * n_ * n_ + basis * n_;
    for (std::size_t m = 0; m < n_; ++m) {
      for (std::size_t r = 0; r < n_; ++r) {
        if (!c(m, r).is_zero()) mat_(row0 + m, col0 + r) += coeff * c(m, r);
      }
    }
  }

  // coeff * (X_block applied to the fixed vector w)
  void apply_term(std::size_t block, const Vec& w, const Scalar& coeff) {
    const std::size_t row0 = (group_ - 1) * n_;
    for (std::size_t c = 0; c < n_; ++c) {
      if (w[c].is_zero()) continue;
      const Scalar s = coeff * w[c];
      for (std::size_t m = 0; m < n_; ++m) mat_(row0 + m, block * n_ * n_ + c * n_ + m) += s;
    }
  }

  // coeff * C * (X_block applied to the fixed vector w)
  void general_term(std::size_t block, const Matrix& c, const Vec& w, const Scalar& coeff) {
    const std::size_t row0 = (group_ - 1) * n_;
    for (std::size_t wc = 0; wc < n_; ++wc) {
      if (w[wc].is_zero()) continue;
      const Scalar s = coeff * w[wc];
      for (std::size_t m = 0; m < n_; ++m) {
        for (std::size_t r = 0; r < n_; ++r) {
          if (!c(m, r).is_zero()) mat_(row0 + m, block * n_ * n_ + wc * n_ + r) += s * c(m, r);
        }
      }
    }
  }

  Matrix take() { return std::move(mat_); }

 private:
  std::size_t n_;
  Matrix mat_;
  std::size_t group_;
};

struct BasisOps {
  std::vector<Matrix> left, right, jmul;
  explicit BasisOps(const StructureConstantAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      left.push_back(a.left_mult(a.basis_vector(i)));
      right.push_back(a.right_mult(a.basis_vector(i)));
      jmul.push_back(mat_add(left.back(), right.back()));
    }
  }
};

Vec apply_map(const Matrix& f, const Vec& x) { return mat_vec(f, x); }

}  // namespace

MapSpace der_space(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 1, n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.apply_term(0, a.basis_product(i, j), one);
      sys.basis_term(0, ops.right[j], i, -one);
      sys.basis_term(0, ops.left[i], j, -one);
    }
  }
  return {MapKind::Der, nullspace(sys.take())};
}

MapSpace jder_space(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 1, n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.apply_term(0, a.jordan(a.basis_vector(i), a.basis_vector(j)), one);
      sys.basis_term(0, ops.jmul[j], i, -one);
      sys.basis_term(0, ops.jmul[i], j, -one);
    }
  }
  return {MapKind::JDer, nullspace(sys.take())};
}

MapSpace cent_space(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 1, 2 * n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.apply_term(0, a.basis_product(i, j), one);
      sys.basis_term(0, ops.right[j], i, -one);
      sys.next_group();
      sys.apply_term(0, a.basis_product(i, j), one);
      sys.basis_term(0, ops.left[i], j, -one);
    }
  }
  return {MapKind::Cent, nullspace(sys.take())};
}

MapSpace jcent_space(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 1, n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.apply_term(0, a.jordan(a.basis_vector(i), a.basis_vector(j)), one);
      sys.basis_term(0, ops.jmul[j], i, -one);
    }
  }
  return {MapKind::JCent, nullspace(sys.take())};
}

MapSpace qjcent_space(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 1, n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.basis_term(0, ops.jmul[j], i, one);
      sys.basis_term(0, ops.jmul[i], j, -one);
    }
  }
  return {MapKind::QJCent, nullspace(sys.take())};
}

MapSpace qjder_space(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 1, n * n);
  const Scalar one = Scalar::one(a.field());
  const Scalar half = one / (one + one);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      const Vec w = a.jordan(a.basis_vector(i), a.basis_vector(j));
      sys.basis_term(0, ops.jmul[j], i, one);
      sys.basis_term(0, ops.jmul[i], j, one);
      sys.apply_term(0, w, -one);
      // α∘(e_i∘e_j) with α = f(1)/2, linear in f through f(1).
      sys.general_term(0, a.jordan_mult(w), a.unit(), -half);
    }
  }
  return {MapKind::QJDer, nullspace(sys.take())};
}

Matrix gjder_system(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 3, n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.basis_term(0, ops.jmul[j], i, one);                                // f(e_i)∘e_j
      sys.basis_term(1, ops.jmul[i], j, one);                                // e_i∘g(e_j)
      sys.apply_term(2, a.jordan(a.basis_vector(i), a.basis_vector(j)), -one);  // -h(e_i∘e_j)
    }
  }
  return sys.take();
}

MapSpace gjder_space(const StructureConstantAlgebra& a) {
  const std::size_t nn = a.dim() * a.dim();
  return {MapKind::GJDer, solve_and_project(gjder_system(a), 0, nn)};
}

MapSpace fgder_space(const StructureConstantAlgebra& a) {
  const std::size_t nn = a.dim() * a.dim();
  return {MapKind::FGDer, solve_and_project(gjder_system(a), 2 * nn, 3 * nn)};
}

Subspace qjder_space_existential(const StructureConstantAlgebra& a) {
  const std::size_t n = a.dim();
  BasisOps ops(a);
  SystemBuilder sys(a, 2, n * n);
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sys.next_group();
      sys.basis_term(0, ops.jmul[j], i, one);
      sys.basis_term(0, ops.jmul[i], j, one);
      sys.apply_term(1, a.jordan(a.basis_vector(i), a.basis_vector(j)), -one);
    }
  }
  return solve_and_project(sys.take(), 0, n * n);
}

std::optional<PairViolation> first_gjd_violation(const StructureConstantAlgebra& a, const Matrix& f,
                                                 const Matrix& g, const Matrix& h) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
      Vec lhs = add(a.jordan(apply_map(f, ei), ej), a.jordan(ei, apply_map(g, ej)));
      Vec rhs = apply_map(h, a.jordan(ei, ej));
      if (!vec_eq(lhs, rhs)) return PairViolation{i, j, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

GJDecomposition decompose_gjder(const StructureConstantAlgebra& a, const Matrix& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n || f.cols() != n) throw DimensionError("map shape mismatch");
  const std::size_t nn = n * n;
  Matrix full = gjder_system(a);

  // Move the f block to the right-hand side and solve for (g, h).
  Matrix gh(full.rows(), 2 * nn, a.field());
  for (std::size_t r = 0; r < full.rows(); ++r) {
    for (std::size_t c = 0; c < 2 * nn; ++c) gh(r, c) = full(r, nn + c);
  }
  const Vec fvec = vec_of_map(f);
  Vec rhs = zero_vec(full.rows(), a.field());
  for (std::size_t c = 0; c < nn; ++c) {
    if (fvec[c].is_zero()) continue;
    for (std::size_t r = 0; r < full.rows(); ++r) {
      if (!full(r, c).is_zero()) rhs[r] -= full(r, c) * fvec[c];
    }
  }
  LinearSolve sol = solve_linear(gh, rhs);
  Matrix g = map_of_vec(Vec(sol.particular.begin(), sol.particular.begin() + static_cast<std::ptrdiff_t>(nn)), n);
  Matrix h = map_of_vec(Vec(sol.particular.begin() + static_cast<std::ptrdiff_t>(nn), sol.particular.end()), n);
  if (!sol.consistent) {
    auto v = first_gjd_violation(a, f, g, h);
    if (!v) throw Error("inconsistent witness system without a violated pair");
    throw MembershipError("map is not a generalized Jordan derivation: no (g, h) exists; "
                          "best candidate fails at basis pair (" + a.labels()[v->i] + ", " +
                          a.labels()[v->j] + "): lhs = " + a.format_element(v->lhs) +
                          ", rhs = " + a.format_element(v->rhs),
                          v->i, v->j, a.format_element(v->lhs), a.format_element(v->rhs));
  }
  if (auto v = first_gjd_violation(a, f, g, h)) {
    throw Error("witness verification failed unexpectedly");
  }
  const Scalar one = Scalar::one(a.field());
  const Scalar half = one / (one + one);
  GJDecomposition out{mat_scale(mat_add(f, g), half), mat_scale(mat_sub(f, g), half), std::move(g),
                      std::move(h)};
  return out;
}

namespace {

std::optional<PairViolation> first_qjder_violation(const StructureConstantAlgebra& a,
                                                   const Matrix& f, const Vec& alpha) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
      const Vec w = a.jordan(ei, ej);
      Vec lhs = add(a.jordan(apply_map(f, ei), ej), a.jordan(ei, apply_map(f, ej)));
      Vec rhs = add(apply_map(f, w), a.jordan(alpha, w));
      if (!vec_eq(lhs, rhs)) return PairViolation{i, j, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

}  // namespace

QJDerClassification classify_qjder(const StructureConstantAlgebra& a, const Matrix& f) {
  const Scalar one = Scalar::one(a.field());
  const Scalar half = one / (one + one);
  const Vec alpha = scaled(apply_map(f, a.unit()), half);
  if (auto v = first_qjder_violation(a, f, alpha)) {
    throw MembershipError("map is not a quasi Jordan derivation: fails at basis pair (" +
                          a.labels()[v->i] + ", " + a.labels()[v->j] + "): lhs = " +
                          a.format_element(v->lhs) + ", rhs = " + a.format_element(v->rhs),
                          v->i, v->j, a.format_element(v->lhs), a.format_element(v->rhs));
  }
  QJDerClassification out;
  out.alpha = alpha;
  if (z_jordan(a).contains(alpha)) {
    out.split = true;
    Matrix jc = a.jordan_mult(alpha);
    Matrix d = mat_sub(f, jc);
    // d must now satisfy the Jordan derivation law.
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
        Vec lhs = apply_map(d, a.jordan(ei, ej));
        Vec rhs = add(a.jordan(apply_map(d, ei), ej), a.jordan(ei, apply_map(d, ej)));
        if (!vec_eq(lhs, rhs)) throw Error("split part is not a Jordan derivation");
      }
    }
    out.jcent_part = std::move(jc);
    out.jder_part = std::move(d);
  } else {
    out.split = false;
    for (std::size_t i = 0; i < a.dim() && !out.obstruction; ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec w = a.lie(a.lie(alpha, a.basis_vector(i)), a.basis_vector(j));
        if (!is_zero_vec(w)) {
          out.obstruction = {i, j};
          out.obstruction_value = std::move(w);
          break;
        }
      }
    }
    if (!out.obstruction) throw Error("obstructed map without witness pair");
  }
  return out;
}

Vec extract_alpha(const StructureConstantAlgebra& a, const Matrix& f) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
      Vec lhs = a.jordan(apply_map(f, ei), ej);
      Vec rhs = a.jordan(ei, apply_map(f, ej));
      if (!vec_eq(lhs, rhs)) {
        throw MembershipError("map is not a quasi Jordan centralizer: fails at basis pair (" +
                              a.labels()[i] + ", " + a.labels()[j] + "): lhs = " +
                              a.format_element(lhs) + ", rhs = " + a.format_element(rhs),
                              i, j, a.format_element(lhs), a.format_element(rhs));
      }
    }
  }
  const Scalar one = Scalar::one(a.field());
  const Scalar half = one / (one + one);
  Vec alpha = scaled(apply_map(f, a.unit()), half);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!vec_eq(apply_map(f, a.basis_vector(i)), a.jordan(alpha, a.basis_vector(i)))) {
      throw Error("quasi Jordan centralizer is not α∘-");
    }
  }
  if (!z_quasi(a).contains(alpha)) throw Error("α of a quasi Jordan centralizer must lie in Z_Q");
  return alpha;
}

}  // namespace jordanlab
