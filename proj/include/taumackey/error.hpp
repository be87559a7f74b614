#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taumackey {

enum class ErrorKind {
  ClosureCapExceeded,
  NonGroup,
  UnknownFamily,
  InvalidMap,
  NotBijective,
  HomomorphismViolation,
  WrongKind,
  NotInvolutory,
  NotCliffordGroup,
  InconsistentImages,
  NotAutomorphism,
  NotCommuting,
  NotInteger,
  InvalidAction,
  BudgetExceeded,
  DegenerateEigenspaces,
  GroupMismatch,
  NonIntegralMultiplicity,
  NonIntegralIndicator,
  ValueOutOfRange,
  NoMatchingRow,
  CrossCheckFailed,
  NotASubgroup,
  CaseClassificationFailed,
  NotGelfand,
  KNotTauInvariant,
  HypothesisFailed,
  UnknownLabel,
  InvalidSpec,
};

std::string_view to_string(ErrorKind kind);

// True for kinds that mean the implementation contradicted itself (a
// mathematical cross-check failed) rather than bad input.
bool is_cross_check_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace taumackey
