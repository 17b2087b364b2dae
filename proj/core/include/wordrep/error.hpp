#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordrep {

enum class ErrorKind {
  InvalidInput,
  InvalidQuery,
  DomainViolation,
  PreconditionFailure,
  NamingConflict,
  ResourceLimit,
  ConstructionBug,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind lets
/// callers (notably the CLI) map failures onto exit codes without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by lemma1_concat when some j in 1..k-1 has no index set
/// containing both j and j+1.
class ChainConditionError : public Error {
 public:
  explicit ChainConditionError(std::size_t uncovered);

  std::size_t uncovered() const noexcept { return uncovered_; }

 private:
  std::size_t uncovered_;
};

}  // namespace wordrep
