#include "taumackey/error.hpp"

namespace taumackey {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::NonGroup: return "NonGroup";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::HomomorphismViolation: return "HomomorphismViolation";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::NotInvolutory: return "NotInvolutory";
    case ErrorKind::NotCliffordGroup: return "NotCliffordGroup";
    case ErrorKind::InconsistentImages: return "InconsistentImages";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotInteger: return "NotInteger";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateEigenspaces: return "DegenerateEigenspaces";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::NonIntegralIndicator: return "NonIntegralIndicator";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::NoMatchingRow: return "NoMatchingRow";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::CaseClassificationFailed: return "CaseClassificationFailed";
    case ErrorKind::NotGelfand: return "NotGelfand";
    case ErrorKind::KNotTauInvariant: return "KNotTauInvariant";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

bool is_cross_check_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInteger:
    case ErrorKind::NonIntegralMultiplicity:
    case ErrorKind::NonIntegralIndicator:
    case ErrorKind::ValueOutOfRange:
    case ErrorKind::NoMatchingRow:
    case ErrorKind::CrossCheckFailed:
    case ErrorKind::CaseClassificationFailed:
    case ErrorKind::DegenerateEigenspaces:
      return true;
    default:
      return false;
  }
}

}  // namespace taumackey
