#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature hit its refinement limit before reaching tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

/// An input that must be a normalized Wigner function is not.
struct NormalizationViolation : Error {
    using Error::Error;
};

/// A second-moment (tail) integral failed to converge.
struct DivergentMoment : Error {
    using Error::Error;
};

/// A covariance matrix is not positive definite.
struct NotPositiveDefinite : Error {
    using Error::Error;
};

/// The constraint linear system is ill-conditioned beyond the usable threshold.
struct SingularSystem : Error {
    using Error::Error;
};

/// A constructed solution goes negative on its support: the parameters lie
/// outside the valid branch.
struct NegativityDetected : Error {
    using Error::Error;
};

/// A scalar root search found no sign change in its window.
struct NoBracket : Error {
    using Error::Error;
};

/// A branch parameter lies outside its admissible range.
struct ParamOutOfRange : Error {
    using Error::Error;
};

/// A requested solution does not exist for the given inputs.
struct NoSolution : Error {
    using Error::Error;
};

/// An input file violates the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace wigner
