#pragma once

// Block Hankel machinery for truncated matricial Hamburger moment sequences.
//
// For a sequence (s_0, ..., s_2n) the block Hankel matrix H_n = [s_{j+k}] is the
// object whose nonnegativity defines the class H>= of Hamburger nonnegative
// definite sequences. The sequences that can be prolonged inside that class
// (H>=,e) are characterized through the predictor Theta_n = z H_{n-1}^+ y and the
// residual L_n = s_2n - Theta_n. The Schur complement of L_n relative to
// ran L_{n-1} then yields the upper endpoint R_n of the extension interval and
// the canonical representative of each equivalence class.

#include <optional>

#include "subschur/sequence.hpp"

namespace subschur {

enum class IntervalBound {
  Given,      // [Theta_n, s_2n]: extensions inside H>=
  Canonical,  // [Theta_n, R_n]: extensions inside H>=,e
};

struct Interval {
  Matrix lower;
  Matrix upper;
};

/// H_n, the (n+1)q x (n+1)q matrix with (j, k) block s_{j+k}. Requires 2n <= kappa.
Matrix block_hankel(const MomentSequence& s, std::size_t n);

/// Block column of s_l, ..., s_m.
Matrix y_block(const MomentSequence& s, std::size_t l, std::size_t m);
/// Block row of s_l, ..., s_m.
Matrix z_block(const MomentSequence& s, std::size_t l, std::size_t m);

/// Theta_n = z_{n,2n-1} H_{n-1}^+ y_{n,2n-1}, Theta_0 = 0.
Matrix theta(const MomentSequence& s, std::size_t n, const Tolerance& tol = {});
/// L_n = s_2n - Theta_n.
Matrix l_matrix(const MomentSequence& s, std::size_t n, const Tolerance& tol = {});

/// H_n >= 0 for a sequence of odd length 2n + 1. Even lengths throw
/// OddOrderUnsupported.
bool is_hnnd(const MomentSequence& s, const Tolerance& tol = {});
/// Membership in H>=,e, for either parity.
bool is_hnnde(const MomentSequence& s, const Tolerance& tol = {});

/// R_n = Theta_n + S(L_n, ran L_{n-1}), R_0 = s_0. Requires s_0..s_2n in H>=.
Matrix r_upper(const MomentSequence& s, std::size_t n, const Tolerance& tol = {});

/// s with its last block replaced by R_n. Requires odd length and H>=.
MomentSequence canonical_rep(const MomentSequence& s, const Tolerance& tol = {});

/// Endpoints of the admissible set for the last block of s (odd length, H>=).
Interval extension_interval(const MomentSequence& s, IntervalBound bound,
                            const Tolerance& tol = {});
bool in_extension_interval(const MomentSequence& s, const Matrix& t_last,
                           IntervalBound bound, const Tolerance& tol = {});

/// The three conditions characterizing the equivalence class of s.
struct ClassConditions {
  bool prefix_equal = false;     // r_j = s_j for j < kappa
  bool difference_psd = false;   // r_last - R >= 0
  bool ranges_trivial = false;   // ran(r_last - R) meets ran L_{n-1} (or kappa_{m-1}) in 0
  /// canonical_rep(r) == canonical_rep(s); present when r is itself nonnegative definite.
  std::optional<bool> canonical_agrees;

  bool same_class() const { return prefix_equal && difference_psd && ranges_trivial; }
};

ClassConditions class_conditions(const MomentSequence& s, const MomentSequence& r,
                                 const Tolerance& tol = {});
bool same_class(const MomentSequence& s, const MomentSequence& r, const Tolerance& tol = {});

struct HamburgerReport {
  bool is_hnnd = false;
  bool is_hnnde = false;
  Matrix theta;
  Matrix l;
  std::optional<Matrix> l_prev;
  std::optional<Matrix> r;
  std::optional<MomentSequence> canonical;
};

/// Full analysis of an odd-length sequence.
HamburgerReport classify_hamburger(const MomentSequence& s, const Tolerance& tol = {});

}  // namespace subschur
