#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwis {

// Base for every error raised by the library. Callers that only care about
// "bad input vs. bug" can catch this and look at the derived type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class MissingWeight : public Error {
public:
    explicit MissingWeight(std::uint32_t symbol)
        : Error("symbol " + std::to_string(symbol) + " has no weight"), symbol_(symbol) {}

    std::uint32_t symbol() const noexcept { return symbol_; }

private:
    std::uint32_t symbol_;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A decoded value fell outside the band the construction guarantees. This is
// never the user's fault: the solver or a gadget is broken.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message, const std::string& source = "")
        : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + message),
          line_(line),
          message_(message),
          source_(source) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }
    /// File name or other origin of the input, empty if unknown.
    const std::string& source() const noexcept { return source_; }

private:
    std::size_t line_;
    std::string message_;
    std::string source_;
};

}  // namespace cwis
