#ifndef CRISSCROSS_ERRORS_HPP
#define CRISSCROSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crisscross {

// Base for all library errors. Subclasses carry the contract-level error
// names so callers can catch by category.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParams : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero field element") {}
};
struct OutOfRange : Error {
    using Error::Error;
};
struct NotEncodable : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct Infeasible : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct ContentLengthMismatch : Error {
    using Error::Error;
};
struct Undecodable : Error {
    using Error::Error;
};
struct Ambiguous : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct NotASubsequence : Error {
    using Error::Error;
};
struct NotASupersequence : Error {
    using Error::Error;
};
struct NoConsistentPattern : Error {
    using Error::Error;
};
struct AmbiguousPattern : Error {
    using Error::Error;
};
struct InvalidSize : Error {
    using Error::Error;
};
struct NotALocatorSubpattern : Error {
    using Error::Error;
};
struct NotALocatorSuperpattern : Error {
    using Error::Error;
};
struct MarkerNotFound : Error {
    using Error::Error;
};
struct TooSmall : Error {
    using Error::Error;
};
struct SingularParitySelection : Error {
    using Error::Error;
};
struct EncodingFailure : Error {
    using Error::Error;
};
struct TooManyErasures : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct LocalizationFailure : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace crisscross

#endif
