#pragma once

#include <stdexcept>
#include <string>

namespace ratpoly {

/// The point set spans less than two dimensions.
class DegenerateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A caller broke a documented precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class RepositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polygon record; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ratpoly
