#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcohom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (JSON, builtin names, flags).
class InputError : public Error {
public:
    using Error::Error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A vector or subspace that must lie in a subspace does not.
class ContainmentError : public Error {
public:
    using Error::Error;
};

/// A family of maps fails to commute with the differentials.
class ChainMapError : public Error {
public:
    using Error::Error;
};

/// A sequence that must be exact is not (lift failures, broken SES).
class ExactnessError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Ideal absorption fails.
class IdealError : public Error {
public:
    using Error::Error;
};

/// A cochain space exceeds the configured coordinate budget.
class SizeBudgetError : public Error {
public:
    SizeBudgetError(const std::string& what, std::size_t dimension, std::size_t budget)
        : Error(what), dimension_(dimension), budget_(budget) {}
    std::size_t dimension() const { return dimension_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t dimension_;
    std::size_t budget_;
};

}  // namespace hcohom
