#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgposet {

enum class ErrorKind {
  CapExceeded,
  DegreeMismatch,
  UnknownSpec,
  PrimeDoesNotDivide,
  NotInSylow,
  NotFullyCentralized,
  SizeExceeded,
  ActionInvalid,
  OrderNotTransitive,
  PreconditionViolated,
  Disconnected,
  InvalidInput,
};

std::string_view toString(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(toString(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Budget-type failures (caps and size bounds) as opposed to bad input.
  bool isBudget() const noexcept {
    return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::SizeExceeded;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::UnknownSpec: return "UnknownSpec";
    case ErrorKind::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case ErrorKind::NotInSylow: return "NotInSylow";
    case ErrorKind::NotFullyCentralized: return "NotFullyCentralized";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::ActionInvalid: return "ActionInvalid";
    case ErrorKind::OrderNotTransitive: return "OrderNotTransitive";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace pgposet
