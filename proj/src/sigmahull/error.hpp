#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmahull {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidExponent,
  InvalidField,
  ZeroCode,
  TooLarge,
  Incompatible,
  FormulaMismatch,
  NotSquare,
  NotMonomial,
  PreconditionFailed,
  DegenerateDefiningMatrix,
  FieldTooSmall,
  TargetOutOfRange,
  SearchExhausted,
  NotMds,
  Parse,
  Io,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the leading error name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sigmahull
