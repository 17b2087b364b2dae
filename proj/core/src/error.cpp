#include "wordrep/error.hpp"

namespace wordrep {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidQuery: return "invalid-query";
    case ErrorKind::DomainViolation: return "domain-violation";
    case ErrorKind::PreconditionFailure: return "precondition-failure";
    case ErrorKind::NamingConflict: return "naming-conflict";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::ConstructionBug: return "construction-bug";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

ChainConditionError::ChainConditionError(std::size_t uncovered)
    : Error(ErrorKind::PreconditionFailure,
            "chain condition violated: no index set contains both " +
                std::to_string(uncovered) + " and " +
                std::to_string(uncovered + 1)),
      uncovered_(uncovered) {}

}  // namespace wordrep
