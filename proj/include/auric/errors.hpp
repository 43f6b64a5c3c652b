#ifndef AURIC_ERRORS_HPP
#define AURIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace auric {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an interface contract (e.g. mixed operand scales).
struct ContractViolation : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation (x >= 1, division by
// zero, negative radicand, ...).
struct DomainError : Error {
    using Error::Error;
};

// Argument outside the supported numeric range (exp cap, negative exponent).
struct RangeError : Error {
    using Error::Error;
};

// The requested computation would exceed available resources; the message
// names the attempted allocation.
struct ResourceError : Error {
    using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace auric

#endif // AURIC_ERRORS_HPP
