#ifndef VARCODE_ERRORS_HPP
#define VARCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace varcode {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrimeError : Error {
    using Error::Error;
};
struct NotIrreducibleError : Error {
    using Error::Error;
};
struct NotPrimitiveError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};
struct RingMismatchError : Error {
    using Error::Error;
};
struct ZeroPolynomialError : Error {
    using Error::Error;
};
struct UnknownVariableError : Error {
    using Error::Error;
};
struct IncompatibleOrderError : Error {
    using Error::Error;
};
struct DuplicatePointError : Error {
    using Error::Error;
};
struct FunctionalDegenerateError : Error {
    using Error::Error;
};
struct EmptyVarietyError : Error {
    using Error::Error;
};
struct LengthMismatchError : Error {
    using Error::Error;
};
struct NotCorrectableError : Error {
    using Error::Error;
};
struct GhostOnVarietyError : Error {
    using Error::Error;
};
struct NoGhostAvailableError : Error {
    using Error::Error;
};
struct LocatorMissingError : Error {
    using Error::Error;
};
struct EvaluatorMissingError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

} // namespace varcode

#endif
