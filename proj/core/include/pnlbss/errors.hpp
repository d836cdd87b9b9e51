#pragma once

#include <stdexcept>
#include <string>

namespace pnlbss {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejected input: shape/size mismatch between operands.
struct DimensionError : Error {
    using Error::Error;
};

/// Constructor invariant violation (non-finite entries, bad parameters, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// Argument outside a nonlinearity's declared domain.
struct DomainError : Error {
    using Error::Error;
};

/// Inverse target outside the image of the domain.
struct RangeError : Error {
    using Error::Error;
};

/// Data unusable for estimation (constant channel, singular covariance, ...).
struct DegenerateDataError : Error {
    using Error::Error;
};

/// Too few samples for a statistical estimate.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Update step could not be made valid within the allowed halvings.
struct StepFailureError : Error {
    using Error::Error;
};

/// Random search exhausted without satisfying the requested constraints.
struct InfeasibleConstraintError : Error {
    using Error::Error;
};

/// A compensator stopped being strictly increasing on the data range.
struct MonotonicityError : Error {
    using Error::Error;
};

}  // namespace pnlbss
