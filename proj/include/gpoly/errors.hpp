#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

/// Argument outside an operation's domain (bad (n, d), zero polynomial, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// sturm_count was asked to evaluate at an endpoint that is a root.
class EndpointRootError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A recurrence divides by a coefficient that vanishes at this point.
class SingularCoefficientError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; always indicates a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gpoly
