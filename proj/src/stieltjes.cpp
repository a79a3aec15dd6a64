#include "subschur/stieltjes.hpp"

#include <cmath>
#include <string>

#include "residual.hpp"
#include "subschur/schur.hpp"

namespace subschur {

using detail::cleaned_residual;
using detail::range_within;

namespace {

void require_finite(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be a finite real number");
}

void require_knnd(const MomentSequence& s, double alpha, const Tolerance& tol,
                  const char* what) {
  if (!is_knnd(s, alpha, tol)) {
    throw Error(ErrorCode::NotKNND,
                std::string(what) + ": sequence is not alpha-Stieltjes nonnegative definite");
  }
}

Matrix shifted_theta(const MomentSequence& s, double alpha, std::size_t k,
                     const Tolerance& tol) {
  if (k == 0) return Matrix::Zero(s.block_size(), s.block_size());
  return theta(alpha_shift(s, alpha), k, tol);
}

// ran kappa_{m-1}; the whole space when m = 0.
Matrix previous_kappa(const MomentSequence& s, double alpha, std::size_t m,
                      const Tolerance& tol) {
  if (m == 0) return Matrix::Identity(s.block_size(), s.block_size());
  return clamp_psd(kappa(s, alpha, m - 1, tol), s.scale(), tol);
}

}  // namespace

MomentSequence alpha_shift(const MomentSequence& s, double alpha) {
  require_finite(alpha);
  if (s.length() < 2) {
    throw Error(ErrorCode::TooShort, "alpha_shift: need at least two blocks");
  }
  std::vector<Matrix> shifted;
  shifted.reserve(s.length() - 1);
  for (std::size_t j = 0; j + 1 < s.length(); ++j) shifted.push_back(s[j + 1] - alpha * s[j]);
  return MomentSequence(std::move(shifted));
}

bool is_knnd(const MomentSequence& s, double alpha, const Tolerance& tol) {
  require_finite(alpha);
  const std::size_t m = s.order();
  if (m == 0) return is_hermitian_psd(s[0], tol);
  const MomentSequence shifted = alpha_shift(s, alpha);
  const std::size_t n = m / 2;
  const std::size_t shifted_n = m % 2 == 0 ? n - 1 : n;
  return is_hermitian_psd(block_hankel(s, n), tol) &&
         is_hermitian_psd(block_hankel(shifted, shifted_n), tol);
}

Matrix kappa(const MomentSequence& s, double alpha, std::size_t j, const Tolerance& tol) {
  if (j > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "kappa: index " + std::to_string(j) + " exceeds order " +
                    std::to_string(s.order()));
  }
  const std::size_t k = j / 2;
  if (j % 2 == 0) return s[j] - theta(s, k, tol);
  return s[j] - alpha * s[j - 1] - shifted_theta(s, alpha, k, tol);
}

Matrix u_lower(const MomentSequence& s, double alpha, long m, const Tolerance& tol) {
  require_finite(alpha);
  if (m < -1 || m > static_cast<long>(s.order())) {
    throw Error(ErrorCode::IndexOutOfRange,
                "u_lower: index " + std::to_string(m) + " outside -1.." +
                    std::to_string(s.order()));
  }
  if (m == -1) return Matrix::Zero(s.block_size(), s.block_size());
  const auto mm = static_cast<std::size_t>(m);
  if (mm % 2 == 1) return theta(s, (mm + 1) / 2, tol);
  return alpha * s[mm] + shifted_theta(s, alpha, mm / 2, tol);
}

bool is_knnde(const MomentSequence& s, double alpha, const Tolerance& tol) {
  require_finite(alpha);
  const double scale = s.scale();
  auto prev = cleaned_residual(s[0], scale, tol);
  if (!prev) return false;
  for (std::size_t m = 1; m <= s.order(); ++m) {
    const auto current = cleaned_residual(kappa(s, alpha, m, tol), scale, tol);
    if (!current || !range_within(*current, *prev, scale, tol)) return false;
    prev = current;
  }
  return true;
}

Matrix r_upper_stieltjes(const MomentSequence& s, double alpha, std::size_t m,
                         const Tolerance& tol) {
  if (m > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "r_upper_stieltjes: index " + std::to_string(m) + " exceeds order " +
                    std::to_string(s.order()));
  }
  const MomentSequence head = s.prefix(m + 1);
  require_knnd(head, alpha, tol, "r_upper_stieltjes");
  if (m == 0) return hermitian_part(s[0]);
  const Matrix lower = hermitian_part(u_lower(head, alpha, static_cast<long>(m) - 1, tol));
  const Matrix residual = clamp_psd(head[m] - lower, head.scale(), tol);
  const Subspace v = Subspace::from_columns(previous_kappa(head, alpha, m, tol), tol);
  return hermitian_part(lower + schur_complement(residual, v, tol).schur);
}

MomentSequence canonical_rep_stieltjes(const MomentSequence& s, double alpha,
                                       const Tolerance& tol) {
  return s.with_last(r_upper_stieltjes(s, alpha, s.order(), tol));
}

Interval extension_interval_stieltjes(const MomentSequence& s, double alpha,
                                      IntervalBound bound, const Tolerance& tol) {
  require_knnd(s, alpha, tol, "extension_interval_stieltjes");
  const std::size_t m = s.order();
  Matrix lower = hermitian_part(u_lower(s, alpha, static_cast<long>(m) - 1, tol));
  Matrix upper = bound == IntervalBound::Given ? hermitian_part(s.back())
                                               : r_upper_stieltjes(s, alpha, m, tol);
  return {std::move(lower), std::move(upper)};
}

bool in_extension_interval_stieltjes(const MomentSequence& s, double alpha,
                                     const Matrix& t_last, IntervalBound bound,
                                     const Tolerance& tol) {
  if (t_last.rows() != s.block_size() || t_last.cols() != s.block_size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "in_extension_interval_stieltjes: candidate has wrong shape");
  }
  if (!is_hermitian(t_last, tol)) {
    throw Error(ErrorCode::NotHermitian,
                "in_extension_interval_stieltjes: candidate is not Hermitian");
  }
  const Interval iv = extension_interval_stieltjes(s, alpha, bound, tol);
  return loewner_leq(iv.lower, t_last, tol) && loewner_leq(t_last, iv.upper, tol);
}

ClassConditions class_conditions_stieltjes(const MomentSequence& s, const MomentSequence& r,
                                           double alpha, const Tolerance& tol) {
  if (s.length() != r.length() || s.block_size() != r.block_size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "same_class_stieltjes: sequences differ in length or block size");
  }
  require_knnd(s, alpha, tol, "same_class_stieltjes");
  const std::size_t m = s.order();

  ClassConditions c;
  c.prefix_equal = s.leading_blocks_equal(r, m, tol);
  const Matrix diff = r.back() - r_upper_stieltjes(s, alpha, m, tol);
  if (is_hermitian_psd(diff, tol)) {
    c.difference_psd = true;
    c.ranges_trivial = ranges_intersect_trivially(diff, previous_kappa(s, alpha, m, tol), tol);
  }
  if (is_knnd(r, alpha, tol)) {
    c.canonical_agrees = canonical_rep_stieltjes(r, alpha, tol)
                             .approx_equal(canonical_rep_stieltjes(s, alpha, tol), tol);
  }
  return c;
}

bool same_class_stieltjes(const MomentSequence& s, const MomentSequence& r, double alpha,
                          const Tolerance& tol) {
  return class_conditions_stieltjes(s, r, alpha, tol).same_class();
}

StieltjesReport classify_stieltjes(const MomentSequence& s, double alpha, const Tolerance& tol) {
  const std::size_t m = s.order();
  StieltjesReport report;
  report.is_knnd = is_knnd(s, alpha, tol);
  report.is_knnde = is_knnde(s, alpha, tol);
  for (std::size_t j = 0; j <= m; ++j) {
    report.kappa.push_back(kappa(s, alpha, j, tol));
    report.u.push_back(u_lower(s, alpha, static_cast<long>(j) - 1, tol));
  }
  if (report.is_knnd) {
    report.r = r_upper_stieltjes(s, alpha, m, tol);
    report.canonical = s.with_last(*report.r);
  }
  return report;
}

}  // namespace subschur
