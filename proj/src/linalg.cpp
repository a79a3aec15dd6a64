#include "subschur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subschur {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OddOrderUnsupported: return "OddOrderUnsupported";
    case ErrorCode::NotHNND: return "NotHNND";
    case ErrorCode::NotKNND: return "NotKNND";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SplitInvalid: return "SplitInvalid";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Tolerance::Tolerance(double eps_rel) : eps_rel_(eps_rel) {
  if (!(eps_rel > 0.0) || !std::isfinite(eps_rel)) {
    throw std::invalid_argument("tolerance must be a positive finite number");
  }
}

double Tolerance::threshold(double scale) const noexcept {
  return eps_rel_ * std::max(1.0, scale);
}

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a square matrix, got " + shape(a));
  }
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector(0);
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

// Eigen-based pseudoinverse for Hermitian input; eigenvalues with modulus at or
// below the threshold are treated as zero.
Matrix hermitian_pinv(const Matrix& a, const Tolerance& tol) {
  const auto eig = hermitian_eig(a, tol);
  const double scale = eig.values.cwiseAbs().maxCoeff();
  const double cut = tol.threshold(scale);
  RealVector inv = RealVector::Zero(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (std::abs(eig.values(i)) > cut) inv(i) = 1.0 / eig.values(i);
  }
  return hermitian_part(eig.vectors * inv.asDiagonal() * eig.vectors.adjoint());
}

// Orthonormal bases of the numerically significant left/right singular subspaces.
struct SignificantSvd {
  Matrix left;
  Matrix right;
};

SignificantSvd significant_svd(const Matrix& m, const Tolerance& tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double cut = tol.threshold(sv.size() ? sv(0) : 0.0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return {svd.matrixU().leftCols(rank), svd.matrixV().leftCols(rank)};
}

Matrix general_pinv(const Matrix& a, const Tolerance& tol) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double cut = tol.threshold(sv.size() ? sv(0) : 0.0);
  RealVector inv = RealVector::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

// Subspace -------------------------------------------------------------------

Subspace Subspace::full(Index q) { return Subspace(q, Matrix::Identity(q, q)); }

Subspace Subspace::zero(Index q) { return Subspace(q, Matrix(q, 0)); }

Subspace Subspace::from_columns(const Matrix& m, const Tolerance& tol) {
  const Index q = m.rows();
  if (m.cols() == 0 || q == 0) return zero(q);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
  const RealVector& sv = svd.singularValues();
  const double cut = tol.threshold(sv(0));
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return Subspace(q, svd.matrixU().leftCols(rank));
}

Matrix Subspace::projector() const {
  if (dim() == 0) return Matrix::Zero(ambient_dim_, ambient_dim_);
  return hermitian_part(basis_ * basis_.adjoint());
}

Subspace Subspace::orthogonal_complement() const {
  const Index q = ambient_dim_;
  if (dim() == 0) return full(q);
  if (dim() == q) return zero(q);
  // Left singular vectors past the rank of the basis span its complement.
  Eigen::JacobiSVD<Matrix> svd(basis_, Eigen::ComputeFullU);
  return Subspace(q, svd.matrixU().rightCols(q - dim()));
}

// Hermitian primitives -------------------------------------------------------

Matrix hermitian_part(const Matrix& a) {
  require_square(a, "hermitian_part");
  return (a + a.adjoint()) * 0.5;
}

bool is_hermitian(const Matrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol.threshold(a.norm());
}

EigenDecomposition hermitian_eig(const Matrix& a, const Tolerance& tol) {
  require_square(a, "hermitian_eig");
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorCode::NotHermitian, "hermitian_eig: matrix is not Hermitian");
  }
  if (a.size() == 0) return {RealVector(0), Matrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& a, const Tolerance& tol) {
  auto eig = hermitian_eig(a, tol);
  if (eig.values.size() == 0) return Matrix(0, 0);
  const double cut = tol.threshold(eig.values.cwiseAbs().maxCoeff());
  RealVector roots(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    if (lambda < -cut) {
      throw Error(ErrorCode::NotPSD, "psd_sqrt: matrix has eigenvalue " +
                                         std::to_string(lambda) + " < 0");
    }
    roots(i) = lambda > cut ? std::sqrt(lambda) : 0.0;
  }
  return hermitian_part(eig.vectors * roots.asDiagonal() * eig.vectors.adjoint());
}

namespace {

Matrix zero_small_eigenvalues(const Matrix& a, double scale, const Tolerance& tol, bool strict) {
  const double cut = tol.threshold(scale);
  if (a.rows() != a.cols() || (a - a.adjoint()).norm() > cut) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
  }
  auto eig = hermitian_eig(hermitian_part(a), tol);
  for (Index i = 0; i < eig.values.size(); ++i) {
    double& lambda = eig.values(i);
    if (strict && lambda < -cut) {
      throw Error(ErrorCode::NotPSD, "matrix has eigenvalue " + std::to_string(lambda) + " < 0");
    }
    if (lambda <= cut) lambda = 0.0;
  }
  return hermitian_part(eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint());
}

}  // namespace

Matrix clamp_psd(const Matrix& a, double scale, const Tolerance& tol) {
  return zero_small_eigenvalues(a, scale, tol, false);
}

Matrix clean_psd(const Matrix& a, double scale, const Tolerance& tol) {
  return zero_small_eigenvalues(a, scale, tol, true);
}

Matrix pinv(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  if (a.rows() == a.cols() && is_hermitian(a, tol)) return hermitian_pinv(a, tol);
  return general_pinv(a, tol);
}

Index numerical_rank(const Matrix& m, const Tolerance& tol) {
  const RealVector sv = singular_values(m);
  if (sv.size() == 0) return 0;
  const double cut = tol.threshold(sv(0));
  return static_cast<Index>((sv.array() > cut).count());
}

Matrix range_projector(const Matrix& m, const Tolerance& tol) {
  const Index q = m.rows();
  if (m.size() == 0) return Matrix::Zero(q, q);
  // Same as M M^+, formed from the singular vectors to avoid the 1/sigma round trip.
  const Matrix u = significant_svd(m, tol).left;
  return hermitian_part(u * u.adjoint());
}

Subspace subspace_from_columns(const Matrix& m, const Tolerance& tol) {
  return Subspace::from_columns(m, tol);
}

Matrix fiber_projector(const Matrix& m, const Subspace& v, const Tolerance& tol) {
  if (v.ambient_dim() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "fiber_projector: subspace lives in C^" + std::to_string(v.ambient_dim()) +
                    " but the matrix is " + shape(m));
  }
  const Index p = m.cols();
  const Matrix residual = m - v.projector() * m;  // (I - P_V) M
  if (residual.size() == 0) return Matrix::Identity(p, p);
  // I - N^+ N, with N^+ N = V_r V_r^* from the SVD of N.
  const Matrix right = significant_svd(residual, tol).right;
  return hermitian_part(Matrix::Identity(p, p) - right * right.adjoint());
}

namespace {

double spectral_scale(const Matrix& h, const Tolerance& tol) {
  const auto eig = hermitian_eig(hermitian_part(h), tol);
  return eig.values.size() == 0 ? 0.0 : eig.values.cwiseAbs().maxCoeff();
}

}  // namespace

bool is_psd(const Matrix& a, const Tolerance& tol) {
  const auto eig = hermitian_eig(a, tol);
  if (eig.values.size() == 0) return true;
  const double cut = tol.threshold(eig.values.cwiseAbs().maxCoeff());
  return eig.values(0) >= -cut;
}

bool is_hermitian_psd(const Matrix& a, const Tolerance& tol) {
  return is_hermitian(a, tol) && is_psd(a, tol);
}

bool loewner_leq(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "loewner_leq: shapes " + shape(a) + " and " + shape(b) + " differ");
  }
  if (!is_hermitian(a, tol) || !is_hermitian(b, tol)) {
    throw Error(ErrorCode::NotHermitian, "loewner_leq: operands must be Hermitian");
  }
  const auto eig = hermitian_eig(hermitian_part(b) - hermitian_part(a), tol);
  if (eig.values.size() == 0) return true;
  const double scale = std::max({eig.values.cwiseAbs().maxCoeff(), spectral_scale(a, tol),
                                 spectral_scale(b, tol)});
  return eig.values(0) >= -tol.threshold(scale);
}

bool range_included(const Matrix& b, const Matrix& a, const Tolerance& tol) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "range_included: row counts of " + shape(b) + " and " + shape(a) + " differ");
  }
  if (b.size() == 0) return true;
  const Matrix outside = b - range_projector(a, tol) * b;
  return outside.norm() <= tol.threshold(b.norm());
}

bool ranges_intersect_trivially(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "ranges_intersect_trivially: row counts of " + shape(a) + " and " +
                    shape(b) + " differ");
  }
  if (a.cols() == 0 || b.cols() == 0) return true;
  Matrix joined(a.rows(), a.cols() + b.cols());
  joined << a, b;
  return numerical_rank(joined, tol) == numerical_rank(a, tol) + numerical_rank(b, tol);
}

}  // namespace subschur
