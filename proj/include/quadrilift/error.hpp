#pragma once

#include <stdexcept>
#include <string>

namespace quadrilift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (zero where a
/// unit is required, a non-prime place, a malformed rational, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A degenerate symmetric matrix was passed where a nondegenerate one is
/// required. Callers at the admissibility layer map this to a forced-zero
/// Fourier coefficient.
class DegenerateGramError : public Error {
public:
    using Error::Error;
};

/// Precondition failure on shapes, dimensions or sizes.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The request is well formed but outside what is implemented
/// (even-dimensional characters, n > 1 unramified pairing, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// No admissible character data exists for the given pair of spaces.
class NoAdmissibleDataError : public Error {
public:
    using Error::Error;
};

/// Euler product requested outside its region of absolute convergence.
class DivergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace quadrilift
