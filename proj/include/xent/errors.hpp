// errors.hpp
// Exception types shared by all xent modules.

#pragma once

#include <stdexcept>
#include <string>

namespace xent {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix expected to be Hermitian is not, beyond tolerance.
class NotHermitianError : public Error {
public:
    using Error::Error;
};

// Diagonal sum differs from 1 beyond tolerance.
class TraceViolationError : public Error {
public:
    using Error::Error;
};

// A closed-form eigenvalue of the state is negative beyond tolerance.
class NegativeEigenvalueError : public Error {
public:
    NegativeEigenvalueError(const std::string& what, double eigenvalue)
        : Error(what), offending_eigenvalue(eigenvalue) {}
    double offending_eigenvalue = 0.0;
};

// A 4x4 matrix has nonzero entries off the main and anti diagonal.
class NotXShapedError : public Error {
public:
    using Error::Error;
};

// A state failed validation where a valid state is required.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

// A branch-dependent quantity was requested with no negative branch.
class BranchUndefinedError : public Error {
public:
    using Error::Error;
};

// An argument is outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class UnknownFamilyError : public Error {
public:
    using Error::Error;
};

class GridTooLargeError : public Error {
public:
    using Error::Error;
};

// A boundary was requested along a slice whose verdict never changes.
class NoTransitionError : public Error {
public:
    using Error::Error;
};

class UnknownCriterionError : public Error {
public:
    using Error::Error;
};

// Malformed input file or JSON (distinct from semantically invalid states).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace xent
