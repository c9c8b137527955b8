#pragma once

#include <stdexcept>
#include <string>

namespace qinfo {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix or state failed its structural invariants (Hermiticity, trace,
// positivity, unknown state name, bad parameters).
struct InvalidState : Error {
    using Error::Error;
};

// A partition label is empty, out of range, overlapping, or does not cover
// the declared subsystems.
struct InvalidPartition : Error {
    using Error::Error;
};

// A measurement basis is not unitary within tolerance.
struct InvalidBasis : Error {
    using Error::Error;
};

// Operands act on incompatible spaces.
struct DimensionError : Error {
    using Error::Error;
};

// Scalar argument outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// support(a) is not contained in support(b), so S(a||b) diverges.
struct InfiniteRelativeEntropy : Error {
    using Error::Error;
};

// An eigensolver or other numerical routine failed to converge.
struct NumericalFailure : Error {
    using Error::Error;
};

// Malformed input text or JSON (syntax or shape, as opposed to a violated
// physical invariant).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qinfo
