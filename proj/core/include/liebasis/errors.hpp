#ifndef LIEBASIS_ERRORS_HPP
#define LIEBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liebasis {

/// Failure classes raised by the engine.  Every throwing operation documents
/// which kinds it can produce; anything tagged Internal indicates a bug in the
/// engine itself rather than bad input.
enum class ErrorKind {
  Structural,          ///< malformed value: dimension mismatch, bad index, ...
  Parse,               ///< unreadable or ill-formed serialized input
  NotAntisymmetric,    ///< structure constants break c_ij^k = -c_ji^k
  JacobiFails,         ///< structure constants break the Jacobi identity
  NotNilpotent,        ///< lower central series does not reach zero
  NotSolvable,         ///< derived series does not reach zero
  SplitInvalid,        ///< supplied basis split fails one of its checks
  NotNilpotentAction,  ///< an ad-operator power series fails to terminate
  NotUnimodular,       ///< determinant exists but is not a nonzero constant
  Singular,            ///< determinant is identically zero
  CompatibilityFails,  ///< coefficient matrix violates the closure equations
  NotClosed,           ///< candidate gradient has unequal mixed partials
  NoProgress,          ///< peeling failed to clear the next column
  NonConstantJacobian, ///< polynomial map has non-constant Jacobian det
  Internal,            ///< engine invariant violated
};

/// Stable text tag for an ErrorKind, used both in messages and by the CLI to
/// pick exit codes.
inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Structural: return "structural";
  case ErrorKind::Parse: return "parse";
  case ErrorKind::NotAntisymmetric: return "not antisymmetric";
  case ErrorKind::JacobiFails: return "Jacobi identity fails";
  case ErrorKind::NotNilpotent: return "not nilpotent";
  case ErrorKind::NotSolvable: return "not solvable";
  case ErrorKind::SplitInvalid: return "split invalid";
  case ErrorKind::NotNilpotentAction: return "action not nilpotent";
  case ErrorKind::NotUnimodular: return "not unimodular";
  case ErrorKind::Singular: return "singular";
  case ErrorKind::CompatibilityFails: return "compatibility fails";
  case ErrorKind::NotClosed: return "not closed";
  case ErrorKind::NoProgress: return "no progress";
  case ErrorKind::NonConstantJacobian: return "non-constant Jacobian";
  case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Shorthand for raising an Error of the given kind.
[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace liebasis

#endif
