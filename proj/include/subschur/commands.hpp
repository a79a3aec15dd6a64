#pragma once

#include <iosfwd>
#include <optional>

#include "subschur/hamburger.hpp"
#include "subschur/json_io.hpp"

namespace subschur::cli {

/// Process exit codes. Diagnostics go to stderr, reports to stdout.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNotPSD = 3,
  kDimensionMismatch = 4,
  kOddOrderUnsupported = 5,
  kNotHermitian = 6,
  kShapeMismatch = 7,
  kNotNonnegativeDefinite = 8,
  kOtherError = 9,
};

int exit_code_for(ErrorCode code);

/// Input: {"A": matrix, "V": q x d matrix whose columns span V}.
io::Json schur_report(const io::Json& input, const Tolerance& tol);

/// Hamburger path when `alpha` is empty, alpha-Stieltjes path otherwise.
io::Json classify_report(const MomentSequence& s, std::optional<double> alpha,
                         const Tolerance& tol);

io::Json interval_report(const MomentSequence& s, const Matrix& last, IntervalBound bound,
                         std::optional<double> alpha, const Tolerance& tol);

io::Json class_test_report(const MomentSequence& s, const MomentSequence& r,
                           std::optional<double> alpha, const Tolerance& tol);

/// Matrix from a --last file: a bare matrix, a bare number (1 x 1) or {"matrix": M}.
Matrix parse_last_block(const io::Json& j, Index q);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace subschur::cli
