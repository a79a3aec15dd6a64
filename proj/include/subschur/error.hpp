#pragma once

#include <stdexcept>
#include <string>

namespace subschur {

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  NoConvergence,
  DimensionMismatch,
  IndexOutOfRange,
  OddOrderUnsupported,
  NotHNND,
  NotKNND,
  ShapeMismatch,
  SplitInvalid,
  TooShort,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subschur
