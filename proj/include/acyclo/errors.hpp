#pragma once

#include <stdexcept>
#include <string>

namespace acyclo {

/// Invalid arguments: bad (n, d), mismatched dimensions, malformed patterns.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed hypergraph document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured budget. `bound` is the size
/// of the search space that triggered the guard, in decimal.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::string bound)
        : std::runtime_error(what + " (bound " + bound + ")"), bound_(std::move(bound)) {}

    const std::string& bound() const noexcept { return bound_; }

private:
    std::string bound_;
};

}  // namespace acyclo
