#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kdelta {

// Validation covers bad input data and violated preconditions (CLI exit 2);
// Inconsistency covers states that valid data cannot reach (CLI exit 3).
enum class ErrorKind { Validation, Inconsistency };

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message,
        ErrorKind kind = ErrorKind::Validation)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        kind_(kind) {}

  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }

private:
  std::string code_;
  ErrorKind kind_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              ErrorKind kind = ErrorKind::Validation) {
  throw Error(std::move(code), message, kind);
}

}  // namespace kdelta
