#pragma once

#include <stdexcept>
#include <string>

namespace hkbase {

// Every failure the library raises derives from Error so callers can map
// categories to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape problems: vector length vs. rank, non-square Gram matrices.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A documented precondition on a value does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A reflection scalar 2(D,a)/q(D) is not an integer.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

// Requested work is outside the supported size envelope.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// The classifier's hypotheses are not certified for the context.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken, or user data contradicts a proven statement.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Unparseable or schema-violating input (JSON files, CLI flags).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace hkbase
