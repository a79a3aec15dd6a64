#pragma once

// Schur complement of a nonnegative Hermitian matrix relative to a subspace.
//
// For A >= 0 and a subspace V of C^q,
//
//   S(A, V) = sqrt(A) * Psi(A, V) * sqrt(A),
//
// where Psi(A, V) projects onto the fiber {x : sqrt(A) x in V}. S(A, V) is the
// Loewner-largest X with 0 <= X <= A and ran X inside V, and A - S(A, V) is the
// unique remainder whose range meets V only in 0.

#include <utility>

#include "subschur/linalg.hpp"

namespace subschur {

struct SchurResult {
  Matrix schur;       // S(A, V)
  Matrix fiber;       // Psi(A, V)
  Matrix complement;  // A - S(A, V)
};

SchurResult schur_complement(const Matrix& a, const Subspace& v, const Tolerance& tol = {});

/// Same matrix through a unitary adapted to V: with B = U^* A U split along
/// V + V^perp, returns U diag(B11 - B12 B22^+ B21, 0) U^*.
Matrix schur_complement_via_basis(const Matrix& a, const Subspace& v,
                                  const Tolerance& tol = {});

/// min over y in V^perp of (x - y)^* A (x - y), in closed form.
double variational_value(const Matrix& a, const Subspace& v, const Vector& x,
                         const Tolerance& tol = {});

/// X lies in {X : 0 <= X <= A, ran X inside V}.
bool in_lcr(const Matrix& a, const Subspace& v, const Matrix& x, const Tolerance& tol = {});

struct Split {
  Matrix inside;     // ran inside V
  Matrix remainder;  // ran meets V trivially
};

Split decompose(const Matrix& a, const Subspace& v, const Tolerance& tol = {});

/// Whether (x, y) with x + y = A is the split produced by decompose(), i.e.
/// ran x inside V and ran y meeting V only in 0. Pairs with a non-PSD part are
/// rejected. Throws SplitInvalid when x + y differs from A.
bool is_unique_split(const Matrix& a, const Subspace& v, const Matrix& x, const Matrix& y,
                     const Tolerance& tol = {});

}  // namespace subschur
