#pragma once

#include "jordanlab/algebra.hpp"

namespace jordanlab {

/// Z(A) = {a : [a, x] = 0 for all x}.
Subspace center(const StructureConstantAlgebra& a);

/// Z_J(A) = {a : [[a, x], y] = 0 for all x, y}.
Subspace z_jordan(const StructureConstantAlgebra& a);

/// Z_Q(A) = {a : [a, [x, y]] = 0 for all x, y}.
Subspace z_quasi(const StructureConstantAlgebra& a);

struct CenterChain {
  Subspace z;
  Subspace z_j;
  Subspace z_q;
};

/// All three centers; enforces F*1 <= Z <= Z_J <= Z_Q.
CenterChain center_chain(const StructureConstantAlgebra& a);

/// Trace-form radical criterion, valid for finite-dimensional algebras in
/// characteristic zero: semiprime iff (a, b) -> trace(L_a L_b) is
/// nondegenerate. Refuses prime-field scalars.
bool is_semiprime_char0(const StructureConstantAlgebra& a);

}  // namespace jordanlab
