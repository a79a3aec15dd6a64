#include "subschur/schur.hpp"

#include <algorithm>
#include <string>

namespace subschur {

namespace {

void require_psd_operand(const Matrix& a, const Subspace& v, const Tolerance& tol,
                         const char* what) {
  if (a.rows() != a.cols() || a.rows() != v.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + ", subspace lives in C^" +
                    std::to_string(v.ambient_dim()));
  }
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorCode::NotHermitian, std::string(what) + ": matrix is not Hermitian");
  }
  if (!is_psd(a, tol)) {
    throw Error(ErrorCode::NotPSD, std::string(what) + ": matrix is not PSD");
  }
}

}  // namespace

SchurResult schur_complement(const Matrix& a, const Subspace& v, const Tolerance& tol) {
  require_psd_operand(a, v, tol, "schur_complement");
  const Index q = a.rows();
  const Matrix sym = hermitian_part(a);
  if (v.dim() == q) {
    return {sym, Matrix::Identity(q, q), Matrix::Zero(q, q)};
  }
  if (v.dim() == 0) {
    return {Matrix::Zero(q, q), Matrix::Identity(q, q) - range_projector(sym, tol), sym};
  }
  const Matrix root = psd_sqrt(sym, tol);
  Matrix fiber = fiber_projector(root, v, tol);
  Matrix s = hermitian_part(root * fiber * root);
  Matrix y = hermitian_part(sym - s);
  return {std::move(s), std::move(fiber), std::move(y)};
}

Matrix schur_complement_via_basis(const Matrix& a, const Subspace& v, const Tolerance& tol) {
  require_psd_operand(a, v, tol, "schur_complement_via_basis");
  const Index q = a.rows();
  const Index d = v.dim();
  if (d == q) return hermitian_part(a);
  if (d == 0) return Matrix::Zero(q, q);

  // Complete the basis of V with an orthonormal basis of ran(I - P_V) taken from
  // a column-pivoted QR factorization.
  const Matrix complement_projector = Matrix::Identity(q, q) - v.projector();
  Eigen::ColPivHouseholderQR<Matrix> qr(complement_projector);
  const Matrix q_full = qr.householderQ();
  Matrix u(q, q);
  u << v.basis(), q_full.leftCols(q - d);

  const Matrix b = u.adjoint() * hermitian_part(a) * u;
  const Matrix b11 = b.topLeftCorner(d, d);
  const Matrix b12 = b.topRightCorner(d, q - d);
  const Matrix b21 = b.bottomLeftCorner(q - d, d);
  const Matrix b22 = b.bottomRightCorner(q - d, q - d);

  Matrix core = Matrix::Zero(q, q);
  core.topLeftCorner(d, d) = b11 - b12 * pinv(b22, tol) * b21;
  return hermitian_part(u * core * u.adjoint());
}

double variational_value(const Matrix& a, const Subspace& v, const Vector& x,
                         const Tolerance& tol) {
  require_psd_operand(a, v, tol, "variational_value");
  if (x.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "variational_value: vector length mismatch");
  }
  const Matrix sym = hermitian_part(a);
  const double quad = (x.adjoint() * sym * x)(0, 0).real();
  const Subspace perp = v.orthogonal_complement();
  if (perp.dim() == 0) return std::max(quad, 0.0);
  const Matrix& w = perp.basis();
  const Vector wax = w.adjoint() * sym * x;
  const Matrix waw = hermitian_part(w.adjoint() * sym * w);
  const double reduction = (wax.adjoint() * pinv(waw, tol) * wax)(0, 0).real();
  return std::max(quad - reduction, 0.0);
}

bool in_lcr(const Matrix& a, const Subspace& v, const Matrix& x, const Tolerance& tol) {
  if (!is_hermitian(x, tol)) {
    throw Error(ErrorCode::NotHermitian, "in_lcr: candidate is not Hermitian");
  }
  if (x.rows() != a.rows() || x.rows() != v.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "in_lcr: shapes differ");
  }
  return is_psd(x, tol) && loewner_leq(x, a, tol) && range_included(x, v.basis(), tol);
}

Split decompose(const Matrix& a, const Subspace& v, const Tolerance& tol) {
  auto result = schur_complement(a, v, tol);
  return {std::move(result.schur), std::move(result.complement)};
}

bool is_unique_split(const Matrix& a, const Subspace& v, const Matrix& x, const Matrix& y,
                     const Tolerance& tol) {
  if (x.rows() != a.rows() || x.cols() != a.cols() || y.rows() != a.rows() ||
      y.cols() != a.cols() || a.rows() != v.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "is_unique_split: shapes differ");
  }
  if ((x + y - a).norm() > tol.threshold(a.norm())) {
    throw Error(ErrorCode::SplitInvalid, "is_unique_split: X + Y does not reproduce A");
  }
  if (!is_hermitian(x, tol) || !is_hermitian(y, tol)) return false;
  if (!is_psd(x, tol) || !is_psd(y, tol)) return false;
  return range_included(x, v.basis(), tol) && ranges_intersect_trivially(y, v.basis(), tol);
}

}  // namespace subschur
