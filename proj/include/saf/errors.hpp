#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saf {

/// A precondition of a library call was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(format(line, column, message)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& message) {
        if (!line) return message;
        std::string where = "line " + std::to_string(line);
        if (column) where += ", column " + std::to_string(column);
        return where + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

/// A brute-force procedure was asked to handle more arguments than allowed.
class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(std::size_t size, std::size_t bound)
        : std::runtime_error("framework has " + std::to_string(size) + " arguments, exceeding the bound of " +
                             std::to_string(bound)),
          size_(size),
          bound_(bound) {}

    std::size_t size() const { return size_; }
    std::size_t bound() const { return bound_; }

private:
    std::size_t size_;
    std::size_t bound_;
};

}  // namespace saf
