#pragma once

#include <stdexcept>
#include <string>

namespace rgc {

/// Malformed user input: bad type strings, weight syntax, invalid ranks.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its precondition (non-dominant weight,
/// non-vertex apex, point outside the chamber, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The input is well formed but exceeds what the implementation supports.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A search budget (memory, node count) was exhausted.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed. Firing indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rgc
