#include "jordanlab/centers.hpp"

namespace jordanlab {

Subspace center(const StructureConstantAlgebra& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    // Row block: x -> [x, e_i], i.e. R_{e_i} - L_{e_i} applied to the unknown.
    blocks.push_back(mat_sub(a.right_mult(a.basis_vector(i)), a.left_mult(a.basis_vector(i))));
  }
  return nullspace(vstack(blocks));
}

Subspace z_jordan(const StructureConstantAlgebra& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.dim() * a.dim());
  std::vector<Matrix> br;
  br.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    br.push_back(mat_sub(a.right_mult(a.basis_vector(i)), a.left_mult(a.basis_vector(i))));
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      blocks.push_back(mat_mul(br[j], br[i]));  // x -> [[x, e_i], e_j]
    }
  }
  return nullspace(vstack(blocks));
}

Subspace z_quasi(const StructureConstantAlgebra& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec w = a.lie(a.basis_vector(i), a.basis_vector(j));
      if (is_zero_vec(w)) continue;
      blocks.push_back(mat_sub(a.right_mult(w), a.left_mult(w)));  // x -> [x, [e_i, e_j]]
    }
  }
  if (blocks.empty()) return Subspace::full_space(a.field(), a.dim());
  return nullspace(vstack(blocks));
}

CenterChain center_chain(const StructureConstantAlgebra& a) {
  CenterChain chain{center(a), z_jordan(a), z_quasi(a)};
  Subspace unit_line = Subspace::span(a.field(), a.dim(), {a.unit()});
  if (!subspace_leq(unit_line, chain.z) || !subspace_leq(chain.z, chain.z_j) ||
      !subspace_leq(chain.z_j, chain.z_q)) {
    throw Error("center chain inclusion violated on " + a.name());
  }
  return chain;
}

bool is_semiprime_char0(const StructureConstantAlgebra& a) {
  if (!a.field().is_rational()) {
    throw UnsupportedFieldError("semiprimeness test requires rational scalars");
  }
  const std::size_t n = a.dim();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(a.left_mult(a.basis_vector(i)));
  Matrix gram(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Scalar tr = Scalar::zero(a.field());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!left[i](r, c).is_zero() && !left[j](c, r).is_zero()) {
            tr += left[i](r, c) * left[j](c, r);
          }
        }
      }
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  }
  return rref(gram).rank() == n;
}

}  // namespace jordanlab
