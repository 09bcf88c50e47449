#ifndef COPANGLE_ERRORS_HPP
#define COPANGLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copangle {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two matrices of different orders were combined.
struct OrderMismatch : Error {
  using Error::Error;
};

/// An operation requiring a nonzero matrix received the zero matrix.
struct ZeroMatrix : Error {
  using Error::Error;
};

/// An iterative scheme hit its iteration cap before meeting its tolerance.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// The matrix order is outside the range the operation supports.
struct UnsupportedOrder : Error {
  using Error::Error;
};

/// Diagonal scaling requires strictly positive diagonal entries.
struct NonpositiveDiagonal : Error {
  using Error::Error;
};

/// The sign-case copositivity test requires a nonnegative diagonal.
struct NegativeDiagonal : Error {
  using Error::Error;
};

/// The requested enumeration exceeds the hard lattice-size cap.
struct ResourceCap : Error {
  using Error::Error;
};

/// An argument lies outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// The off-diagonal sign pattern does not match the construction's requirement.
struct SignPatternError : Error {
  using Error::Error;
};

/// The cone projection of the input vanished (input lies in the polar cone).
struct ZeroProjection : Error {
  using Error::Error;
};

/// Matrix file is malformed.
struct ParseError : Error {
  using Error::Error;
};

/// Matrix file deviates from symmetry beyond the accepted threshold.
struct AsymmetryError : Error {
  using Error::Error;
};

/// File could not be opened or read.
struct IoError : Error {
  using Error::Error;
};

}  // namespace copangle

#endif  // COPANGLE_ERRORS_HPP
