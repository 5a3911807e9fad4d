#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace foliage {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Order (or valuation) requested for the zero polynomial.
class UndefinedOrderError : public Error {
public:
    UndefinedOrderError() : Error("order of the zero polynomial is undefined") {}
};

/// A precondition of an operation does not hold for its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Always a bug or an invalid hand-built object.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of the operation (e.g. component not above a point).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A singular point with non-rational coordinates was required.
class UnsupportedFieldError : public Error {
public:
    UnsupportedFieldError(const std::string& what, std::string factor)
        : Error(what + ": no rational roots for factor " + factor), factor_(std::move(factor)) {}

    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

/// Curves sharing a component have no finite intersection number.
class InfiniteIntersectionError : public Error {
public:
    InfiniteIntersectionError() : Error("curves share a common component") {}
};

/// Malformed projective 1-form.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Point not contained in the requested affine chart.
class ChartError : public Error {
public:
    using Error::Error;
};

/// Syntax or binding error in an expression, with 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace foliage
