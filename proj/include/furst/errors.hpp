#pragma once

#include <stdexcept>
#include <string>

namespace furst {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation failures.
struct NotPrimeError : Error {
    using Error::Error;
};
struct NotDisjointError : Error {
    using Error::Error;
};
struct EmptyInputError : Error {
    using Error::Error;
};
struct EqualPointsError : Error {
    using Error::Error;
};
struct PreconditionFailedError : Error {
    using Error::Error;
};

// Resource-bound failures. Exact arithmetic refuses to approximate; when a
// result would exceed a configured bound these are thrown instead.
struct CapExceededError : Error {
    using Error::Error;
};
struct ModulusBlowupError : Error {
    using Error::Error;
};

}  // namespace furst
