#pragma once

// alpha-Stieltjes counterpart of the Hamburger machinery: moment sequences of
// measures on [alpha, oo).
//
// The shifted sequence s_{alpha,j} = -alpha s_j + s_{j+1} carries the support
// constraint. Nonnegativity is a pair of Hankel conditions whose shape depends
// on the parity of m, and the residuals kappa_j = s_j - u_{j-1} take over the
// role of L_n: the extension interval for s_m is [u_{m-1}, R_m] with
// R_m = u_{m-1} + S(kappa_m, ran kappa_{m-1}).

#include <vector>

#include "subschur/hamburger.hpp"

namespace subschur {

/// (-alpha s_j + s_{j+1}) for j = 0..kappa-1. Throws TooShort for a single block.
MomentSequence alpha_shift(const MomentSequence& s, double alpha);

/// Membership in K>=: s_0 >= 0 for m = 0; H_n >= 0 and H_{alpha,n-1} >= 0 for
/// m = 2n; H_n >= 0 and H_{alpha,n} >= 0 for m = 2n + 1.
bool is_knnd(const MomentSequence& s, double alpha, const Tolerance& tol = {});

/// kappa_{2k} = s_{2k} - Theta_k and kappa_{2k+1} = s_{alpha,2k} - Theta_{alpha,k}.
Matrix kappa(const MomentSequence& s, double alpha, std::size_t j, const Tolerance& tol = {});

/// u_{-1} = 0, u_{2k-1} = Theta_k, u_{2k} = alpha s_{2k} + Theta_{alpha,k}.
Matrix u_lower(const MomentSequence& s, double alpha, long m, const Tolerance& tol = {});

/// Membership in K>=,e, decided recursively from the kappa sequence.
bool is_knnde(const MomentSequence& s, double alpha, const Tolerance& tol = {});

/// R_m = u_{m-1} + S(kappa_m, ran kappa_{m-1}), R_0 = s_0. Requires s_0..s_m in K>=.
Matrix r_upper_stieltjes(const MomentSequence& s, double alpha, std::size_t m,
                         const Tolerance& tol = {});

MomentSequence canonical_rep_stieltjes(const MomentSequence& s, double alpha,
                                       const Tolerance& tol = {});

Interval extension_interval_stieltjes(const MomentSequence& s, double alpha,
                                      IntervalBound bound, const Tolerance& tol = {});
bool in_extension_interval_stieltjes(const MomentSequence& s, double alpha,
                                     const Matrix& t_last, IntervalBound bound,
                                     const Tolerance& tol = {});

ClassConditions class_conditions_stieltjes(const MomentSequence& s, const MomentSequence& r,
                                           double alpha, const Tolerance& tol = {});
bool same_class_stieltjes(const MomentSequence& s, const MomentSequence& r, double alpha,
                          const Tolerance& tol = {});

struct StieltjesReport {
  bool is_knnd = false;
  bool is_knnde = false;
  std::vector<Matrix> kappa;  // kappa_0 .. kappa_m
  std::vector<Matrix> u;      // u_{-1} .. u_{m-1}
  std::optional<Matrix> r;
  std::optional<MomentSequence> canonical;
};

StieltjesReport classify_stieltjes(const MomentSequence& s, double alpha,
                                   const Tolerance& tol = {});

}  // namespace subschur
