#pragma once

#include <stdexcept>
#include <string>

namespace evscan {

/// Input outside an operation's mathematical domain (negative grid step,
/// non-finite value, n too small for the nested logarithms, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Structurally inconsistent arguments (length mismatch, missing parameter).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative computation could not reach the requested tolerance within
/// its configured budget (series term cap, quadrature panel cap).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, long line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

}  // namespace evscan
