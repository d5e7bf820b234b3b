#pragma once

#include <stdexcept>
#include <string>

namespace vinberg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An internal certificate (solvability, subalgebra closure, Jacobi) did not hold.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

class IdealCountExceeded : public Error {
 public:
  using Error::Error;
};

class NotUnitarizableInput : public Error {
 public:
  using Error::Error;
};

class BadDeterminant : public Error {
 public:
  using Error::Error;
};

class NonPositiveA3 : public Error {
 public:
  using Error::Error;
};

class NotAMember : public Error {
 public:
  using Error::Error;
};

/// A 6x6 matrix is not in the span of the twelve basis matrices.
class ExpansionFailed : public Error {
 public:
  using Error::Error;
};

class SingularDenominator : public Error {
 public:
  using Error::Error;
};

/// The image of a fractional-linear action left the sparse pattern of V_C.
class PatternViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace vinberg
