#pragma once

#include <stdexcept>
#include <string>

namespace supercoh {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Programming errors: dimension mismatches, mixed moduli, bad indices.
class UsageError : public Error {
public:
  using Error::Error;
};

class DegreeOverflow : public Error {
public:
  using Error::Error;
};

class NotInIdeal : public Error {
public:
  using Error::Error;
};

class NotACocycle : public Error {
public:
  using Error::Error;
};

class NoSolution : public Error {
public:
  using Error::Error;
};

class ValueNotInvariant : public Error {
public:
  using Error::Error;
};

class DifferentUnderlying : public Error {
public:
  using Error::Error;
};

// Raised when a theorem-guaranteed property fails; always an upstream bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace supercoh
