#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Broad failure classes. Each maps onto one CLI exit code.
enum class ErrorKind {
    Input,          // malformed or out-of-domain input (exit 2)
    Verification,   // an asserted identity did not hold (exit 1)
    ResourceCap,    // a configured size/iteration cap was exceeded (exit 3)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(ErrorKind::Verification, what) {}
};

class ResourceCapExceeded : public Error {
public:
    explicit ResourceCapExceeded(const std::string& what) : Error(ErrorKind::ResourceCap, what) {}
};

// arith
class UndefinedValuation : public InputError {
public:
    UndefinedValuation() : InputError("valuation of zero is undefined") {}
};

class FactorizationTooHard : public ResourceCapExceeded {
public:
    explicit FactorizationTooHard(const std::string& n)
        : ResourceCapExceeded("factorization too hard: " + n) {}
};

// poly
class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : InputError("syntax error at position " + std::to_string(position) + ": " + msg),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public InputError {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : InputError("unknown variable '" + name + "' at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NonHomogeneous : public InputError {
public:
    explicit NonHomogeneous(const std::string& what)
        : InputError("polynomial is not homogeneous: " + what) {}
    NonHomogeneous(const std::string& what, std::size_t position)
        : InputError("polynomial is not homogeneous at position " + std::to_string(position) + ": " + what) {}
};

class NotDivisible : public Error {
public:
    NotDivisible() : Error(ErrorKind::Verification, "polynomial is not divisible") {}
};

// maps / heights
class IndeterminatePoint : public Error {
public:
    explicit IndeterminatePoint(const std::string& point)
        : Error(ErrorKind::Verification, "map is undefined at " + point) {}
};

class SupportHit : public Error {
public:
    explicit SupportHit(const std::string& point)
        : Error(ErrorKind::Verification, "point lies on the divisor support: " + point) {}
};

class ZeroHeight : public Error {
public:
    explicit ZeroHeight(const std::string& point)
        : Error(ErrorKind::Verification, "point has height zero: " + point) {}
};

}  // namespace orbitlab
