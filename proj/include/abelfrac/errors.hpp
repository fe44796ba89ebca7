#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abelfrac {

// Malformed input text (expression source, CLI flag values).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}

    // byte offset into the source string where parsing failed
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A precondition on an argument or problem definition is violated.
class InvalidArgument : public std::runtime_error {
public:
    explicit InvalidArgument(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation left the domain of a function (ln of non-positive,
// division by zero, gamma at a pole, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative scheme exhausted its budget; carries the best value found.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double partial_value, double error_estimate)
        : std::runtime_error(msg), partial_(partial_value), estimate_(error_estimate) {}

    double partial_value() const noexcept { return partial_; }
    double error_estimate() const noexcept { return estimate_; }

private:
    double partial_;
    double estimate_;
};

} // namespace abelfrac
