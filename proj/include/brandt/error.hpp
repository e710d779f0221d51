#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brandt {

enum class ErrorKind {
  ShapeMismatch,
  IndexOutOfRange,
  DuplicateName,
  NonAssociative,
  BadZero,
  BadOne,
  NotIdempotent,
  NoZero,
  NoOne,
  NotAnIdeal,
  EmptyCover,
  BadTopology,
  CapExceeded,
  CarrierMismatch,
  SearchSpaceTooLarge,
  NotZeroPreserving,
  UOutsideSubgroup,
  PhiNotInjective,
  NotAHomomorphism,
  DomainMismatch,
  BracketOutsideSubgroup,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every validating operation in the library.
///
/// `witness` carries the indices that exhibit the violation (for example the
/// triple (i,j,k) breaking associativity); its meaning depends on `kind`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace brandt
