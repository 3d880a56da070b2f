#pragma once

// Shared test helpers: independent constraint-matrix assembly by direct
// evaluation, and deterministic random algebra generation.

#include <functional>
#include <random>
#include <string>

#include "jordanlab/algebra.hpp"
#include "jordanlab/catalog.hpp"

namespace testsupport {

using namespace jordanlab;

inline Vec random_element(std::mt19937& rng, std::size_t n, const Field& f, long lo = -3,
                          long hi = 3) {
  std::uniform_int_distribution<long> entry(lo, hi);
  Vec v = zero_vec(n, f);
  for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::of_int(entry(rng), f);
  return v;
}

/// Assembles the constraint matrix of a map identity by evaluating the
/// identity on every standard basis map E_rc (column c*n + r) and every
/// basis pair (x, y) = (e_i, e_j). Independent of the production assembler:
/// it only uses the algebra products themselves.
inline Matrix constraints_by_evaluation(
    const StructureConstantAlgebra& a,
    const std::function<Vec(const Matrix&, const Vec&, const Vec&)>& residual) {
  const std::size_t n = a.dim();
  // Probe the residual length once (identities may stack several conditions).
  Matrix probe(n, n, a.field());
  const std::size_t rows_per_pair = residual(probe, a.basis_vector(0), a.basis_vector(0)).size();
  Matrix out(rows_per_pair * n * n, n * n, a.field());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      Matrix e_rc(n, n, a.field());
      e_rc(r, c) = Scalar::one(a.field());
      const std::size_t col = c * n + r;
      std::size_t row = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Vec value = residual(e_rc, a.basis_vector(i), a.basis_vector(j));
          for (const Scalar& s : value) out(row++, col) = s;
        }
      }
    }
  }
  return out;
}

/// Residuals (lhs - rhs, possibly stacked) of the defining identities.
inline Vec der_residual(const StructureConstantAlgebra& a, const Matrix& f, const Vec& x,
                        const Vec& y) {
  Vec lhs = mat_vec(f, a.multiply(x, y));
  Vec rhs = add(a.multiply(mat_vec(f, x), y), a.multiply(x, mat_vec(f, y)));
  return sub(lhs, rhs);
}

inline Vec jder_residual(const StructureConstantAlgebra& a, const Matrix& f, const Vec& x,
                         const Vec& y) {
  Vec lhs = mat_vec(f, a.jordan(x, y));
  Vec rhs = add(a.jordan(mat_vec(f, x), y), a.jordan(x, mat_vec(f, y)));
  return sub(lhs, rhs);
}

inline Vec cent_residual(const StructureConstantAlgebra& a, const Matrix& f, const Vec& x,
                         const Vec& y) {
  Vec fxy = mat_vec(f, a.multiply(x, y));
  Vec first = sub(fxy, a.multiply(mat_vec(f, x), y));
  Vec second = sub(fxy, a.multiply(x, mat_vec(f, y)));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

inline Vec jcent_residual(const StructureConstantAlgebra& a, const Matrix& f, const Vec& x,
                          const Vec& y) {
  return sub(mat_vec(f, a.jordan(x, y)), a.jordan(mat_vec(f, x), y));
}

inline Vec qjcent_residual(const StructureConstantAlgebra& a, const Matrix& f, const Vec& x,
                           const Vec& y) {
  return sub(a.jordan(mat_vec(f, x), y), a.jordan(x, mat_vec(f, y)));
}

inline Vec qjder_residual(const StructureConstantAlgebra& a, const Matrix& f, const Vec& x,
                          const Vec& y) {
  const Scalar half = Scalar::one(a.field()) / Scalar::of_int(2, a.field());
  Vec alpha = scaled(mat_vec(f, a.unit()), half);
  Vec w = a.jordan(x, y);
  Vec lhs = add(a.jordan(mat_vec(f, x), y), a.jordan(x, mat_vec(f, y)));
  Vec rhs = add(mat_vec(f, w), a.jordan(alpha, w));
  return sub(lhs, rhs);
}

/// A random unital subalgebra of the ambient algebra with dim <= max_dim,
/// re-expressed on its own canonical basis. Associativity is inherited.
inline StructureConstantAlgebra random_subalgebra(std::mt19937& rng,
                                                  const StructureConstantAlgebra& ambient,
                                                  std::size_t max_dim, const std::string& name) {
  std::uniform_int_distribution<std::size_t> basis_idx(0, ambient.dim() - 1);
  std::uniform_int_distribution<int> gens_count(1, 2);
  std::uniform_int_distribution<int> terms_count(1, 2);
  std::uniform_int_distribution<long> coeff(1, 3);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vec> gens;
    const int g = gens_count(rng);
    for (int k = 0; k < g; ++k) {
      Vec v = zero_vec(ambient.dim(), ambient.field());
      const int t = terms_count(rng);
      for (int s = 0; s < t; ++s) {
        v[basis_idx(rng)] += Scalar::of_int(coeff(rng), ambient.field());
      }
      if (!is_zero_vec(v)) gens.push_back(v);
    }
    if (gens.empty()) continue;
    Subspace s = subalgebra_generated(ambient, gens, true);
    if (s.dim() > max_dim) continue;
    return induced_subalgebra(ambient, s, name);
  }
  // Single basis-element generators always stay small.
  Subspace s = subalgebra_generated(ambient, {ambient.basis_vector(basis_idx(rng))}, true);
  return induced_subalgebra(ambient, s, name);
}

}  // namespace testsupport
