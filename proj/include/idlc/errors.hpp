#pragma once

#include <stdexcept>
#include <string>

namespace idlc {

/// Argument-shape violations (length mismatches, empty inputs, bad ranges).
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatchError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class EmptyInputError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// Key generation could not obtain enough entropy.
class InsufficientEntropyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A metered adversary ran past one of its budget limits.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// File / container format problems on the CLI surface.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace idlc
