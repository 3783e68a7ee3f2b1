#pragma once

#include <stdexcept>
#include <string>

namespace solidangle {

/// Input violates an operation's precondition (zero dilation, non-coprime
/// parameters, degenerate geometry, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text input: rational literals and polygon files.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold by construction failed. Indicates a bug,
/// never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace solidangle
