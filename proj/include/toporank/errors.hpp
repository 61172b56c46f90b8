#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toporank {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 means the error is not tied
// to a specific line.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input contained no usable data at all (e.g. an edge list with zero edges).
class EmptyInputError : public Error {
public:
    using Error::Error;
};

// Too few (or too degenerate) data points to perform a fit.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// A value outside the mathematical domain of an operation: singular
// exponents, sign-domain failures, nonpositive values fed to a log fit.
class DomainError : public Error {
public:
    using Error::Error;
};

// An invalid experiment or generator configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace toporank
