#pragma once

#include <stdexcept>
#include <string>

namespace clf {

// Root of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter or precondition was violated by the caller.
struct InvalidArgument : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Exact algorithms with hard input caps (circumference, independence number,
// brute-force oracle) refuse oversized inputs instead of approximating.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// No generator is available for the requested Steiner system.
struct DesignUnavailable : Error {
    using Error::Error;
};

// A construction produced something its own invariants rule out.
struct IntegrityError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace clf
