#pragma once

#include <stdexcept>
#include <string>

namespace kldecomp {

// Base class for all library errors. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or schema-violating input documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A PMF failed a construction-time invariant (negative mass, bad
// normalization, tensor length mismatch).
class InvalidPmf : public Error {
 public:
  using Error::Error;
};

// Subset mask is empty or addresses a dimension outside [0, k).
class InvalidSubset : public Error {
 public:
  using Error::Error;
};

// Alphabets disagree between a joint distribution and a reference (or
// between dimensions that must share one alphabet).
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// A symbol is not part of the population / alphabet it is used with.
class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

// A tuple or vector has the wrong length for the requested operation.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// Population spec violations: zero counts, k < 1, k > population size.
class InvalidPopulation : public Error {
 public:
  using Error::Error;
};

// A reference distribution carries zero mass where strict positivity is
// required.
class ReferenceNotPositive : public Error {
 public:
  using Error::Error;
};

// P places mass where the reference has none; the divergence is infinite.
class AbsoluteContinuityViolated : public Error {
 public:
  using Error::Error;
};

// Subset-lattice operations refuse dimensions beyond the hard cap.
class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace kldecomp
