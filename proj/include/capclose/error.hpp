#pragma once

#include <stdexcept>
#include <string>

namespace capclose {

// Base for every error the engine raises on bad input or violated
// preconditions. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed hypergraph, set, certificate file or trajectory.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An audit or classification was requested from a set whose closure already
// meets the forbidden set.
class UnsafeStart : public Error {
 public:
  using Error::Error;
};

class ForbiddenGoal : public Error {
 public:
  using Error::Error;
};

// The coalition gate only accepts antichains whose enumeration was complete.
class NonExhaustiveAntichain : public Error {
 public:
  using Error::Error;
};

// A brute-force routine was asked to run beyond its configured size cap.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace capclose
