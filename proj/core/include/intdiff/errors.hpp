#pragma once

#include <stdexcept>
#include <string>

namespace intdiff {

// Every library failure derives from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct SingularProblem : Error { using Error::Error; };
struct UnsupportedOperator : Error { using Error::Error; };
struct FactorMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroCondition : Error { using Error::Error; };
struct UmbralSearchExceeded : Error { using Error::Error; };
struct DuplicatePoints : Error { using Error::Error; };
struct NotLeftDivisible : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

}  // namespace intdiff
