#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gequiv {

enum class Errc {
  // group_core
  NotSquare,
  EntryOutOfRange,
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  MissingInverse,
  ZeroOrder,
  TooLarge,
  ElementOutOfRange,
  ParentMismatch,
  NotASubgroup,
  // gset
  IdentityNotFixing,
  NotCompatible,
  PointOutOfRange,
  GroupMismatch,
  DimensionMismatch,
  // equivariant
  LengthMismatch,
  BindingMismatch,
  SameOrbit,
  StabilizerNotContained,
  StabilizerMismatch,
  NotInNormalizer,
  NotInvariant,
  NotEquivariantOnSubset,
  EscapesSubset,
  NotEquivariant,
  // rank / oracle
  IndexOutOfRange,
  BudgetExceeded,
  SearchBudgetExceeded,
  NotGenerating,
  // input handling
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for every contract violation in the library.
/// The code is what callers branch on; the message names the offending
/// element, point or triple.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  bool is_budget() const noexcept {
    return code_ == Errc::BudgetExceeded || code_ == Errc::SearchBudgetExceeded;
  }

 private:
  Errc code_;
};

}  // namespace gequiv
