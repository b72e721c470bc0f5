#pragma once

#include <stdexcept>
#include <string>

namespace chev {

enum class ErrorKind {
  BaseMismatch,
  NotInRing,
  SearchBoundExceeded,
  NotMonic,
  ParseError,
  RankTooLow,
  UnsupportedType,
  UnknownRoot,
  ProportionalRoots,
  NotAUnit,
  SizeMismatch,
  PreconditionViolated,
  DescentBudgetExceeded,
  CoveringInconsistent,
  NotInGroup,
  NotFactored,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chev
