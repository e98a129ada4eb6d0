#ifndef MODUNITS_ERRORS_HPP
#define MODUNITS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modunits {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments / precondition violations (maps to CLI exit code 1).
struct DomainError : Error {
    using Error::Error;
};

// Series division by a series that is zero up to its precision.
struct DivisionByZeroSeries : Error {
    using Error::Error;
};

// div/pow asked to produce negative-valuation output.
struct ValuationMismatch : Error {
    using Error::Error;
};

// Truncation order too small to decide an exact question.
struct PrecisionInsufficient : Error {
    using Error::Error;
};

// Candidate set does not span the expected space (maps to CLI exit code 2).
struct RankDeficient : Error {
    RankDeficient(int got, int expected)
        : Error("rank deficient: got " + std::to_string(got) +
                ", expected " + std::to_string(expected)),
          got(got), expected(expected) {}
    int got;
    int expected;
};

// Contradiction with a theorem-backed invariant (maps to CLI exit code 2).
struct InternalError : Error {
    using Error::Error;
};

} // namespace modunits

#endif
