#pragma once

#include <stdexcept>
#include <string>

namespace suptor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition on plain parameters.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Two values from different rings (different ell or precision) were combined.
class ContextError : public Error {
public:
    using Error::Error;
};

/// An operation needed a unit of O/lambda^n but got something of positive valuation.
class NotAUnit : public Error {
public:
    explicit NotAUnit(int valuation);
    int valuation() const noexcept { return valuation_; }

private:
    int valuation_;
};

/// Input outside the domain of a partial map (log, exp, finite quotients, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A matrix failed a group-membership or filtration-level precondition.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// Polynomial text that does not match the grammar, or a non-monic polynomial.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Zero discriminant or repeated factors where a separable polynomial is required.
class InseparableError : public Error {
public:
    using Error::Error;
};

/// Hypotheses of the division-field degree formula could not be verified.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A self-consistency assertion failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace suptor
