#ifndef PLS_ERRORS_HPP
#define PLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pls {

// Base class for all library-thrown errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A scheme produced more distinct messages at some node than its declared r
// (or an ill-formed neighbor partition). This is a scheme bug, not a reject.
struct ConstraintViolation : Error {
    using Error::Error;
};

// A configuration passed to a measurement was flagged illegal by the caller.
struct IllegalInput : Error {
    using Error::Error;
};

// Bad arguments: malformed preconditions, unknown names, invalid parameters.
struct InvalidParams : Error {
    using Error::Error;
};

struct InvalidR : Error {
    using Error::Error;
};

struct MissingSourceSink : Error {
    using Error::Error;
};

struct NotIndependent : Error {
    using Error::Error;
};

struct NotBroadcast : Error {
    using Error::Error;
};

// crossing_attack: all concatenated edge messages are pairwise distinct.
struct NoCollision : Error {
    using Error::Error;
};

struct BudgetTooLarge : Error {
    using Error::Error;
};

struct UnknownProblem : Error {
    using Error::Error;
};

struct TapeTooLong : Error {
    using Error::Error;
};

struct CertificateSpaceTooLarge : Error {
    using Error::Error;
};

struct ComplexityUnknown : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace pls

#endif // PLS_ERRORS_HPP
