#include "subschur/hamburger.hpp"

#include <string>

#include "residual.hpp"
#include "subschur/schur.hpp"

namespace subschur {

using detail::cleaned_residual;
using detail::range_within;

namespace {

std::string idx(std::size_t j) { return std::to_string(j); }

void require_odd_length(const MomentSequence& s, const char* what) {
  if (s.length() % 2 == 0) {
    throw Error(ErrorCode::OddOrderUnsupported,
                std::string(what) + ": Hamburger classes are defined for sequences of odd "
                                    "length 2n+1; got " + idx(s.length()) +
                    " blocks (use the Stieltjes path with --alpha, or drop the last block)");
  }
}

void require_hnnd(const MomentSequence& s, const Tolerance& tol, const char* what) {
  if (!is_hnnd(s, tol)) {
    throw Error(ErrorCode::NotHNND,
                std::string(what) + ": sequence is not Hankel nonnegative definite");
  }
}

// Range of L_{n-1}; for n = 0 the whole space, which makes the class
// conditions collapse to r_0 = s_0.
Matrix previous_residual(const MomentSequence& s, std::size_t n, const Tolerance& tol) {
  if (n == 0) return Matrix::Identity(s.block_size(), s.block_size());
  return clamp_psd(l_matrix(s, n - 1, tol), s.scale(), tol);
}

bool extendable(const MomentSequence& s, double scale, const Tolerance& tol) {
  const std::size_t len = s.length();
  if (len == 1) return cleaned_residual(s[0], scale, tol).has_value();
  const std::size_t n = len / 2;
  if (len % 2 == 0) {
    // (s_0..s_{2n-1}) is extendable iff appending s_2n := Theta_n keeps H_n >= 0.
    const Matrix completion = hermitian_part(theta(s, n, tol));
    return is_hnnd(s.appended(completion), tol);
  }
  if (!extendable(s.prefix(len - 1), scale, tol)) return false;
  const auto l = cleaned_residual(l_matrix(s, n, tol), scale, tol);
  if (!l) return false;
  const Matrix prev = clamp_psd(l_matrix(s, n - 1, tol), scale, tol);
  return range_within(*l, prev, scale, tol);
}

}  // namespace

Matrix block_hankel(const MomentSequence& s, std::size_t n) {
  if (2 * n > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "block_hankel: H_" + idx(n) + " needs s_0..s_" + idx(2 * n) +
                    " but the sequence ends at s_" + idx(s.order()));
  }
  const Index q = s.block_size();
  const Index dim = static_cast<Index>(n + 1) * q;
  Matrix h(dim, dim);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = 0; k <= n; ++k) {
      h.block(static_cast<Index>(j) * q, static_cast<Index>(k) * q, q, q) = s[j + k];
    }
  }
  return h;
}

Matrix y_block(const MomentSequence& s, std::size_t l, std::size_t m) {
  if (l > m || m > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "y_block: range " + idx(l) + ".." + idx(m) + " invalid for order " +
                    idx(s.order()));
  }
  const Index q = s.block_size();
  Matrix y(static_cast<Index>(m - l + 1) * q, q);
  for (std::size_t j = l; j <= m; ++j) y.middleRows(static_cast<Index>(j - l) * q, q) = s[j];
  return y;
}

Matrix z_block(const MomentSequence& s, std::size_t l, std::size_t m) {
  if (l > m || m > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "z_block: range " + idx(l) + ".." + idx(m) + " invalid for order " +
                    idx(s.order()));
  }
  const Index q = s.block_size();
  Matrix z(q, static_cast<Index>(m - l + 1) * q);
  for (std::size_t j = l; j <= m; ++j) z.middleCols(static_cast<Index>(j - l) * q, q) = s[j];
  return z;
}

Matrix theta(const MomentSequence& s, std::size_t n, const Tolerance& tol) {
  const Index q = s.block_size();
  if (n == 0) return Matrix::Zero(q, q);
  if (2 * n - 1 > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "theta: Theta_" + idx(n) + " needs s_0..s_" + idx(2 * n - 1) +
                    " but the sequence ends at s_" + idx(s.order()));
  }
  const Matrix h = block_hankel(s, n - 1);
  return z_block(s, n, 2 * n - 1) * pinv(h, tol) * y_block(s, n, 2 * n - 1);
}

Matrix l_matrix(const MomentSequence& s, std::size_t n, const Tolerance& tol) {
  if (2 * n > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "l_matrix: L_" + idx(n) + " needs s_" + idx(2 * n) +
                    " but the sequence ends at s_" + idx(s.order()));
  }
  return s[2 * n] - theta(s, n, tol);
}

bool is_hnnd(const MomentSequence& s, const Tolerance& tol) {
  require_odd_length(s, "is_hnnd");
  return is_hermitian_psd(block_hankel(s, s.order() / 2), tol);
}

bool is_hnnde(const MomentSequence& s, const Tolerance& tol) {
  return extendable(s, s.scale(), tol);
}

Matrix r_upper(const MomentSequence& s, std::size_t n, const Tolerance& tol) {
  if (2 * n > s.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "r_upper: R_" + idx(n) + " needs s_" + idx(2 * n) +
                    " but the sequence ends at s_" + idx(s.order()));
  }
  const MomentSequence head = s.prefix(2 * n + 1);
  require_hnnd(head, tol, "r_upper");
  if (n == 0) return hermitian_part(s[0]);
  const Matrix th = hermitian_part(theta(head, n, tol));
  const Matrix l = clamp_psd(head[2 * n] - th, head.scale(), tol);
  const Subspace v = Subspace::from_columns(previous_residual(head, n, tol), tol);
  return hermitian_part(th + schur_complement(l, v, tol).schur);
}

MomentSequence canonical_rep(const MomentSequence& s, const Tolerance& tol) {
  require_odd_length(s, "canonical_rep");
  return s.with_last(r_upper(s, s.order() / 2, tol));
}

Interval extension_interval(const MomentSequence& s, IntervalBound bound,
                            const Tolerance& tol) {
  require_odd_length(s, "extension_interval");
  require_hnnd(s, tol, "extension_interval");
  const std::size_t n = s.order() / 2;
  Matrix lower = hermitian_part(theta(s, n, tol));
  Matrix upper = bound == IntervalBound::Given ? hermitian_part(s.back()) : r_upper(s, n, tol);
  return {std::move(lower), std::move(upper)};
}

bool in_extension_interval(const MomentSequence& s, const Matrix& t_last, IntervalBound bound,
                           const Tolerance& tol) {
  if (t_last.rows() != s.block_size() || t_last.cols() != s.block_size()) {
    throw Error(ErrorCode::DimensionMismatch, "in_extension_interval: candidate has wrong shape");
  }
  if (!is_hermitian(t_last, tol)) {
    throw Error(ErrorCode::NotHermitian, "in_extension_interval: candidate is not Hermitian");
  }
  const Interval iv = extension_interval(s, bound, tol);
  return loewner_leq(iv.lower, t_last, tol) && loewner_leq(t_last, iv.upper, tol);
}

ClassConditions class_conditions(const MomentSequence& s, const MomentSequence& r,
                                 const Tolerance& tol) {
  if (s.length() != r.length() || s.block_size() != r.block_size()) {
    throw Error(ErrorCode::ShapeMismatch,
                "same_class: sequences differ in length or block size");
  }
  require_odd_length(s, "same_class");
  require_hnnd(s, tol, "same_class");
  const std::size_t n = s.order() / 2;

  ClassConditions c;
  c.prefix_equal = s.leading_blocks_equal(r, s.order(), tol);
  const Matrix diff = r.back() - r_upper(s, n, tol);
  if (is_hermitian_psd(diff, tol)) {
    c.difference_psd = true;
    c.ranges_trivial = ranges_intersect_trivially(diff, previous_residual(s, n, tol), tol);
  }
  if (is_hnnd(r, tol)) {
    c.canonical_agrees = canonical_rep(r, tol).approx_equal(canonical_rep(s, tol), tol);
  }
  return c;
}

bool same_class(const MomentSequence& s, const MomentSequence& r, const Tolerance& tol) {
  return class_conditions(s, r, tol).same_class();
}

HamburgerReport classify_hamburger(const MomentSequence& s, const Tolerance& tol) {
  require_odd_length(s, "classify");
  const std::size_t n = s.order() / 2;
  HamburgerReport report;
  report.is_hnnd = is_hnnd(s, tol);
  report.is_hnnde = is_hnnde(s, tol);
  report.theta = theta(s, n, tol);
  report.l = l_matrix(s, n, tol);
  if (n > 0) report.l_prev = l_matrix(s, n - 1, tol);
  if (report.is_hnnd) {
    report.r = r_upper(s, n, tol);
    report.canonical = s.with_last(*report.r);
  }
  return report;
}

}  // namespace subschur
