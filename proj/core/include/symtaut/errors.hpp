#pragma once

#include <stdexcept>
#include <string>

namespace symtaut {

/// Raised when an operation's numeric preconditions are violated
/// (out-of-range genus, degree, codimension, index, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two operands live in different ambient rings R*(C_d).
class ContextMismatch : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class DimensionMismatch : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No face-chain theorem applies to the requested (g, d, n).
class NoRegime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace symtaut
