#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or violated preconditions (empty ranges, k too small, ...).
struct UsageError : Error {
    using Error::Error;
};

// Malformed input files or certificate JSON; message carries line/field info.
struct ParseError : Error {
    using Error::Error;
};

// A configured cap was exceeded (window population, brute-force budget, ...).
struct ResourceError : Error {
    using Error::Error;
};

// A grid's declared bounds do not cover a query. Never a silent pass.
struct CoverageError : Error {
    using Error::Error;
};

// Fewer than 3 distinct points, or all points collinear.
struct DegenerateHullError : Error {
    using Error::Error;
};

// Certificate names a grid kind this checker cannot regenerate.
struct UnknownGridKindError : Error {
    using Error::Error;
};

// Certificate version is not one this checker understands.
struct VersionMismatchError : Error {
    using Error::Error;
};

}  // namespace helly
