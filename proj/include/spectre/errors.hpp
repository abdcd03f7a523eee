#pragma once

#include <stdexcept>
#include <string>

namespace spectre {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative eigensolver ran out of its iteration budget.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg), residual(residual) {}
    double residual;
};

/// Linear system is singular to working precision.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& msg, double pivot)
        : Error(msg), pivot(pivot) {}
    double pivot;
};

/// A retry/enumeration budget was exhausted; `details` carries diagnostics.
class BudgetExhaustedError : public Error {
public:
    BudgetExhaustedError(const std::string& msg, std::string details = {})
        : Error(msg), details(std::move(details)) {}
    std::string details;
};

/// Integer-relation search cannot decide at the current working precision.
class PrecisionExhaustedError : public Error {
public:
    using Error::Error;
};

/// Subprocess oracle failed: spawn error, timeout, or protocol violation.
class OracleError : public Error {
public:
    using Error::Error;
};

/// The map under reconstruction is not of a standard form; carries a witness.
class HypothesisViolationError : public Error {
public:
    HypothesisViolationError(const std::string& msg, std::string witness = {})
        : Error(msg), witness(std::move(witness)) {}
    std::string witness;
};

/// Malformed input: bad matrix file, bad block list, duplicate nodes, ...
class InvalidInputError : public Error {
public:
    using Error::Error;
};

}  // namespace spectre
