#pragma once

// Tolerance-aware Hermitian / PSD primitives and subspace calculus.
//
// Every rank, definiteness and inclusion decision in the library goes through
// a single Tolerance so that the predicates stay mutually consistent: a
// quantity is treated as zero when it does not exceed
// eps_rel * max(1, scale), where scale is the largest singular value or
// absolute eigenvalue of the operand involved.

#include <complex>

#include <Eigen/Dense>

#include "subschur/error.hpp"

namespace subschur {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

class Tolerance {
 public:
  static constexpr double kDefaultEps = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double eps_rel);

  double eps_rel() const noexcept { return eps_rel_; }

  /// Absolute threshold for an operand whose spectral scale is `scale`.
  double threshold(double scale) const noexcept;

 private:
  double eps_rel_ = kDefaultEps;
};

/// A linear subspace of C^q, stored through an orthonormal basis (q x d).
/// The zero subspace is represented by a q x 0 basis.
class Subspace {
 public:
  static Subspace full(Index q);
  static Subspace zero(Index q);
  /// Orthonormal basis of ran M, with dimension equal to the numerical rank.
  static Subspace from_columns(const Matrix& m, const Tolerance& tol = {});

  Index ambient_dim() const noexcept { return ambient_dim_; }
  Index dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  Matrix projector() const;
  Subspace orthogonal_complement() const;

 private:
  Subspace(Index q, Matrix basis) : ambient_dim_(q), basis_(std::move(basis)) {}

  Index ambient_dim_ = 0;
  Matrix basis_;
};

struct EigenDecomposition {
  RealVector values;  // ascending
  Matrix vectors;     // unitary, columns are eigenvectors
};

Matrix hermitian_part(const Matrix& a);
bool is_hermitian(const Matrix& a, const Tolerance& tol = {});

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized first.
EigenDecomposition hermitian_eig(const Matrix& a, const Tolerance& tol = {});

/// The unique PSD square root. Eigenvalues within the tolerance of zero
/// (including small negative ones) are set to zero.
Matrix psd_sqrt(const Matrix& a, const Tolerance& tol = {});

/// Hermitian part of `a` with every eigenvalue at or below tol.threshold(scale)
/// set to zero.
Matrix clamp_psd(const Matrix& a, double scale, const Tolerance& tol = {});

/// Like clamp_psd, but throws NotPSD if an eigenvalue lies below -tol.threshold(scale).
Matrix clean_psd(const Matrix& a, double scale, const Tolerance& tol = {});

/// Moore-Penrose inverse. Hermitian input goes through the eigendecomposition,
/// anything else through the SVD.
Matrix pinv(const Matrix& a, const Tolerance& tol = {});

Index numerical_rank(const Matrix& m, const Tolerance& tol = {});

/// Orthogonal projector onto ran M, computed as M M^+.
Matrix range_projector(const Matrix& m, const Tolerance& tol = {});

Subspace subspace_from_columns(const Matrix& m, const Tolerance& tol = {});

/// Orthogonal projector (p x p) onto {x in C^p : M x in V}, for M of shape q x p.
Matrix fiber_projector(const Matrix& m, const Subspace& v, const Tolerance& tol = {});

bool is_psd(const Matrix& a, const Tolerance& tol = {});
/// Non-throwing variant: false for non-square or non-Hermitian input.
bool is_hermitian_psd(const Matrix& a, const Tolerance& tol = {});
/// A <= B in the Loewner order, with the threshold scaled by the larger of A, B
/// and B - A.
bool loewner_leq(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// ran B contained in ran A.
bool range_included(const Matrix& b, const Matrix& a, const Tolerance& tol = {});
/// ran A and ran B meet only in 0 (numerical rank of [A B] is additive).
bool ranges_intersect_trivially(const Matrix& a, const Matrix& b,
                                const Tolerance& tol = {});

}  // namespace subschur
