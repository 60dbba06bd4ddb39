#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sck {

enum class ErrorKind {
  ArityMismatch,
  ArityTooLarge,
  BudgetExceeded,
  CapExceeded,
  ConstantFunction,
  DegreeTooSmall,
  Divisibility,
  DomainError,
  EmptySet,
  ExponentSetNotLowF,
  HasConstants,
  InfeasibleParameters,
  InvalidAntichain,
  InvalidArgument,
  InvalidCircuit,
  InvalidFamily,
  NonMonotone,
  NotApproximating,
  NotComputingF,
  NotHomogeneous,
  NotReadK,
  ParseError,
  Precondition,
  SizeOverflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Cap and budget failures mean "raise the limit", not "wrong input".
  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::CapExceeded || kind_ == ErrorKind::BudgetExceeded ||
           kind_ == ErrorKind::SizeOverflow || kind_ == ErrorKind::ArityTooLarge;
  }

 private:
  ErrorKind kind_;
};

}  // namespace sck
