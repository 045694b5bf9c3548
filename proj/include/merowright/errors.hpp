#pragma once

#include <stdexcept>
#include <string>

namespace mw {

enum class ErrorCode {
  domain,        // argument outside the operation's domain
  range,         // log-space value cannot be exponentiated into a double
  unsupported,   // parameters outside what the operation supports
  precondition,  // class precondition (nonnegativity, membership, |b_k| <= 1)
  pole,          // evaluation at z = 0
  degenerate,    // numeric search could not bracket
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when exp(log_value) is not a finite, normal double. The log value
// is still meaningful and is carried for callers that can work in log form.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double log_value)
      : Error(ErrorCode::range, what), log_value_(log_value) {}
  double log_value() const noexcept { return log_value_; }

 private:
  double log_value_;
};

}  // namespace mw
