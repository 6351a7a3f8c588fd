#ifndef MERTENSFF_ERRORS_HPP
#define MERTENSFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mff {

// Base for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments: non-prime characteristic, non-monic f, out-of-range X, ...
struct InvalidParameterError : Error {
    using Error::Error;
};

// Enumeration budget exceeded (field or family too large to enumerate).
struct ResourceLimitError : Error {
    using Error::Error;
};

// Point counts that cannot come from a nonsingular curve: Newton's identities
// produced a non-exact division, or the recovered P has off-circle roots.
struct InconsistentCountsError : Error {
    using Error::Error;
};

// A refined inverse zero deviates from |gamma| = sqrt(Q) beyond tolerance.
struct WeilViolationError : Error {
    using Error::Error;
};

// Operation defined for simple zeros was asked to act on repeated zeros.
struct UnsupportedMultiplicityError : Error {
    using Error::Error;
};

// A relation candidate cannot be separated from zero at the current
// precision; the caller should retry with more bits.
struct IndeterminateError : Error {
    using Error::Error;
};

// "Cannot happen" conditions: signals a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace mff

#endif
