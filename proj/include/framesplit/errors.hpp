#ifndef FRAMESPLIT_ERRORS_HPP
#define FRAMESPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace framesplit {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed arguments: dimension mismatches, bad subset universes,
// unknown names, unparsable notation. Maps to CLI exit code 2.
struct UsageError : Error {
    using Error::Error;
};

// A scalar function was applied outside its domain (e.g. inverting a
// singular operator). Carries the offending eigenvalue.
struct SpectralDomainError : Error {
    SpectralDomainError(const std::string& msg, double eigenvalue, int index)
        : Error(msg), eigenvalue(eigenvalue), index(index) {}
    double eigenvalue;
    int index;
};

// Input vectors do not span the space / operator numerically singular.
struct NotAFrameError : Error {
    using Error::Error;
};

// A stated precondition does not hold (non-Parseval frame where one is
// required, pair that is not a dual pair, U+V far from identity, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Construction-time invariant violations (asymmetric input beyond the
// defect tolerance, split parts that do not sum to the total, ...).
struct ValidationError : Error {
    using Error::Error;
};

// The iterative eigensolver did not reach its residual target.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, int sweeps)
        : Error(msg), sweeps(sweeps) {}
    int sweeps;
};

// A rejection-sampling generator exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

} // namespace framesplit

#endif
