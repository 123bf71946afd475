#pragma once

#include <stdexcept>
#include <string>

namespace ppl {

enum class ErrorCode {
  ParseError,
  NotAGroup,
  NotNormal,
  BoundExceeded,
  BadReference,
  NotCertified,
  CriterionFails,
  SideConditionViolated,
  StrictViolation,
  FamilyMismatch,
  InvalidFamily,
  Usage,
  Internal,
};

/// Single exception type for the whole library; the code determines the
/// CLI exit status (usage -> 1, bad input -> 2, internal -> 3).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

const char* error_code_name(ErrorCode code);

}  // namespace ppl
