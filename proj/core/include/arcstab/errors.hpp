#pragma once

#include <stdexcept>
#include <string>

namespace arcstab {

// Base of every error raised by the library. Each subclass corresponds to one
// failure mode a caller may want to handle separately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
public:
    using Error::Error;
};

// A valuation decision could not be made within the known truncation window.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DimensionOverflow : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class UnnormalizableWeights : public Error {
public:
    using Error::Error;
};

class RankTooLarge : public Error {
public:
    using Error::Error;
};

class NonCommutingTorus : public Error {
public:
    using Error::Error;
};

class NotProper : public Error {
public:
    using Error::Error;
};

class NotConverged : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column, std::string token)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column) +
                (token.empty() ? std::string{} : " near '" + token + "'")),
          message_(what),
          line_(line),
          column_(column),
          token_(std::move(token))
    {
    }

    /// Message without the location suffix.
    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

} // namespace arcstab
