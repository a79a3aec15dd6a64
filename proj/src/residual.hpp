#pragma once

// Helpers shared by the Hamburger and Stieltjes code: residual matrices are
// judged against the scale of the whole sequence, not their own norm.

#include <optional>

#include "subschur/linalg.hpp"

namespace subschur::detail {

/// clean_psd, with "not PSD" (or not Hermitian) reported as nullopt.
inline std::optional<Matrix> cleaned_residual(const Matrix& m, double scale, const Tolerance& tol) {
  try {
    return clean_psd(m, scale, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPSD || e.code() == ErrorCode::NotHermitian) return std::nullopt;
    throw;
  }
}

/// ran b inside ran a, measured in absolute terms at `scale`.
inline bool range_within(const Matrix& b, const Matrix& a, double scale, const Tolerance& tol) {
  return (b - range_projector(a, tol) * b).norm() <= tol.threshold(scale);
}

}  // namespace subschur::detail
