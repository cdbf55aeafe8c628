#pragma once

#include <stdexcept>
#include <string>

namespace coxa {

/// Raised when an input violates a documented domain invariant
/// (bad token, index out of range, rank mismatch, invalid block, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when the library reaches a state its own invariants rule out.
/// Seeing one of these is a bug in coxa, not in the caller.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Raised when an enumeration would exceed its element budget.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxa
