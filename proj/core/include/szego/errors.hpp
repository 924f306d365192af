#pragma once

#include <stdexcept>
#include <string>

namespace szego {

/// Raised when an argument violates a documented precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by lemma verifiers when the statement being checked does not
/// apply to the given input (e.g. degree too large for the ring size).
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed serialized input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power iteration for the Lipschitz constant did not settle.
class IllConditionedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace szego
