#pragma once

#include <stdexcept>
#include <string>

namespace posetpoly {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad poset files, cycles, out-of-range indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain
/// (e.g. smoothness of a non-Fano polytope, mismatched poset sizes).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The point set does not affinely span the ambient space.
class DegenerateHull : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
/// Always indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace posetpoly
