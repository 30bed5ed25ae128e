#pragma once

#include <stdexcept>
#include <string>

namespace nes {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input: bad dimensions, nonpositive parameters, violated
// type invariants, malformed scenario files. CLI exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Numerical failures: singular pivots, Hurwitz precondition violations,
// diverging integrations. CLI exit code 2.
struct NumericalError : Error {
    using Error::Error;
};

struct SingularMatrixError : NumericalError {
    using NumericalError::NumericalError;
};

struct StabilityPreconditionError : NumericalError {
    using NumericalError::NumericalError;
};

struct DivergenceError : NumericalError {
    DivergenceError(const std::string& what, double time)
        : NumericalError(what), time(time) {}
    double time;
};

}  // namespace nes
