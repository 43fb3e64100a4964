#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace walkcolor {

enum class ErrorKind {
  InvalidArgument,
  OutOfRange,
  CycleInCoverRelations,
  NotALattice,
  AntichainLimitExceeded,
  SizeLimitExceeded,
  NotProperColoring,
  MissingColor,
  InvalidInputColoring,
  InvalidRepresentation,
  PreconditionFailed,
  BudgetViolated,
  DomainCollision,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// True for the errors that mean "the input was fine, the caps were too low".
bool is_resource_limit(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Walk (vertex sequence) that demonstrates the failure, when one exists.
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace walkcolor
