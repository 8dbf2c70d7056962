#pragma once

#include <stdexcept>
#include <string>

namespace hhs {

// Bad user input (unknown vertex, malformed file, violated precondition).
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size/enumeration cap was exceeded.  CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A construction step could not satisfy its own postconditions
// (e.g. net placement infeasible at the requested scale).
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that should hold by theorem failed; signals a bug or an
// invalid instance that slipped past validation.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hhs
