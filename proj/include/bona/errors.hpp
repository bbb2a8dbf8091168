#pragma once

#include <stdexcept>
#include <string>

namespace bona {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument lies outside an operation's documented domain.
struct DomainError : Error {
  using Error::Error;
};

// An exhaustive computation was requested beyond its hard size cap.
struct SizeError : Error {
  using Error::Error;
};

// An exactness assertion failed: a division that must be exact left a
// remainder, or an irrational component that must vanish did not.
// Reaching this indicates a bug, not bad input.
struct ExactnessError : Error {
  using Error::Error;
};

// A refinement loop exhausted its iteration budget without certifying an
// answer either way. Deliberately distinct from a negative result.
struct InconclusiveError : Error {
  using Error::Error;
};

}  // namespace bona
