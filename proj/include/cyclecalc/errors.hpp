#pragma once

#include <stdexcept>
#include <string>

namespace cyclecalc {

/// Operands built for different genera were combined.
class GenusMismatch : public std::invalid_argument {
public:
    GenusMismatch(int lhs, int rhs)
        : std::invalid_argument("genus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An argument outside the documented domain (index out of range, bad gonality, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold by construction did not. Always a bug.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact linear solve hit a singular system.
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cyclecalc
