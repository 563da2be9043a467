#pragma once

#include <stdexcept>
#include <string>

namespace sixvertex {

// Base of every error the library raises. The CLI maps subclasses onto exit
// codes: usage/domain problems are 2, numeric non-convergence is 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard size limit (e.g. brute-force enumeration).
class SizeLimit : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative or adaptive procedure exhausted its budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// The automatic decay probe of a half-line integral failed.
class TailNotDecaying : public NonConvergence {
 public:
  using NonConvergence::NonConvergence;
};

// A contour cannot be placed inside the analyticity strip of the integrand.
class StripViolation : public NonConvergence {
 public:
  using NonConvergence::NonConvergence;
};

// An internal invariant that the mathematics guarantees was violated.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sixvertex
