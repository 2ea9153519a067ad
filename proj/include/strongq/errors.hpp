#pragma once

#include <stdexcept>
#include <string>

namespace strongq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixed quadratic radicands: the operands do not live in one field Q(sqrt(d)).
struct InvalidFieldError : Error { using Error::Error; };
// Non-finite values fed to a float kernel.
struct NumericError : Error { using Error::Error; };
// Dimension / symmetry violations.
struct ShapeError : Error { using Error::Error; };
// Malformed textual input (edge list, graph6, scalar strings, JSON).
struct ParseError : Error { using Error::Error; };
// Matrix pattern does not match the declared graph.
struct PatternError : Error { using Error::Error; };
// Operation requires exact input but got floats.
struct ExactOnlyError : Error { using Error::Error; };
// Argument outside the operation's domain (n < 3, division by zero, ...).
struct DomainError : Error { using Error::Error; };
// Repeated values where distinct ones are required.
struct DistinctnessError : Error { using Error::Error; };
// A stored certificate claim failed re-verification.
struct CorpusIntegrityError : Error { using Error::Error; };
// Enumeration request beyond desk scale.
struct ResourceError : Error { using Error::Error; };
// Newton continuation stalled.
struct ContinuationError : Error { using Error::Error; };
// Lift seed fails the required strong property (or its margin gate).
struct RejectedSeedError : Error { using Error::Error; };
// Lift result lost the multiplicity structure of its seed.
struct LiftIntegrityError : Error { using Error::Error; };
// Prescribed extra eigenvalues collide with the seed spectrum.
struct SpectrumCollisionError : Error { using Error::Error; };

}  // namespace strongq
