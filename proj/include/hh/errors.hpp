#pragma once

#include <stdexcept>
#include <string>

namespace hh {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Vertices are (numerically) affine dependent.
struct DegenerateSimplex : Error {
    using Error::Error;
};

/// The barycentric linear system could not be solved.
struct SolveFailure : Error {
    using Error::Error;
};

/// Barycentric weights do not sum to 1 within tolerance.
struct WeightSumError : Error {
    using Error::Error;
};

/// random_simplex exhausted its retry budget.
struct GenerationFailure : Error {
    using Error::Error;
};

/// A Monte Carlo integrand evaluated to NaN or infinity.
struct NonFiniteSample : Error {
    using Error::Error;
};

/// Matrix failed the positive-semidefiniteness check.
struct NotPSD : Error {
    using Error::Error;
};

/// Strong-convexity modulus must be positive.
struct InvalidModulus : Error {
    using Error::Error;
};

/// Operation requires a different convexity class tag.
struct WrongClass : Error {
    using Error::Error;
};

/// The symmetrization of an additive map failed to be constant.
struct ConstancyViolation : Error {
    using Error::Error;
};

/// A quadrature rule does not match the required linear moments.
struct MomentMismatch : Error {
    using Error::Error;
};

/// Malformed numeric input (non-finite entries, bad sizes, bad parameters).
struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace hh
