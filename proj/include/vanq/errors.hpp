#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vanq {

/// Requested a coefficient (or a comparison) beyond a series' truncation order.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Inversion of a series whose lowest coefficient is not a unit over the integers.
class NonInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Theta/product parameters that do not converge as formal series (|ab| >= 1).
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameter choice that degenerates the requested construction.
class DegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Violated gcd side condition on a theorem instantiation.
class SideConditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Expression or catalog text that does not parse; carries the offending offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace vanq
