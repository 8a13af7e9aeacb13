#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rogers {

enum class ErrorKind { Validation, Parse, UnknownKey, Extinction, Degenerate, NoConvergence, Io };

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Validation: return "VALIDATION";
    case ErrorKind::Parse: return "PARSE";
    case ErrorKind::UnknownKey: return "UNKNOWN_KEY";
    case ErrorKind::Extinction: return "EXTINCTION";
    case ErrorKind::Degenerate: return "DEGENERATE";
    case ErrorKind::NoConvergence: return "NO_CONVERGENCE";
    case ErrorKind::Io: return "IO";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Validation failure that remembers which field was at fault.
class ValidationError : public Error {
public:
  ValidationError(std::string field, const std::string& what)
      : Error(ErrorKind::Validation, field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

}  // namespace rogers
