#pragma once

#include <stdexcept>
#include <string>

namespace subdiff {

/// Input outside the domain of an operation (bad order, exponent, coordinate).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument sits on a pole of the evaluated expression.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Argument outside the range an evaluator has been validated for.
class RangeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A numerical procedure could not meet its tolerance. Carries the name of
/// the module that gave up so front ends can report where it happened.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// Series ran out of terms before reaching its truncation tolerance.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Improper integral does not converge for the requested parameters.
class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace subdiff
