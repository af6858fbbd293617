#pragma once

#include <stdexcept>
#include <string>

namespace fmcy {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix shape mismatch (product, sum, solve).
struct ShapeError : Error {
    using Error::Error;
};

/// Singular matrix or inconsistent linear system; the message names the pivot.
struct SingularityError : Error {
    using Error::Error;
};

/// Unknown variable name.
struct NameError : Error {
    using Error::Error;
};

/// Operands live over different base surfaces.
struct GeometryError : Error {
    using Error::Error;
};

/// Input has components outside the required cohomological degree.
struct GradingError : Error {
    using Error::Error;
};

/// Series operation on a class whose degree-0 slot is not 1.
struct SeriesError : Error {
    using Error::Error;
};

/// A stated precondition of an operation is violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// Integer parity requirement violated.
struct ParityError : Error {
    using Error::Error;
};

/// A lattice map restriction is not invertible.
struct RankError : Error {
    using Error::Error;
};

/// A value cannot be represented in the requested matrix form.
struct RepresentationError : Error {
    using Error::Error;
};

/// A derived matrix matches a stored one under no admissible convention;
/// the message carries both matrices.
struct ReconciliationError : Error {
    using Error::Error;
};

/// Malformed textual input (documents, configs, rationals).
struct ParseError : Error {
    using Error::Error;
};

} // namespace fmcy
