#pragma once

#include <stdexcept>
#include <string>

namespace dwork {

/** Base class for all library errors. */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Function evaluated at a pole (e.g. Gamma at a non-positive integer). */
struct PoleError : Error {
  using Error::Error;
};

/** Matrix/vector dimensions incompatible, or a singular matrix was inverted. */
struct DimensionError : Error {
  using Error::Error;
};

/** Argument outside the documented domain of the operation. */
struct DomainError : Error {
  using Error::Error;
};

/** Operator is not in the canonical form the operation requires. */
struct NotCanonicalForm : Error {
  using Error::Error;
};

/** Operator order unsupported by the operation. */
struct OrderError : Error {
  using Error::Error;
};

/** A series parameter sits on a pole of the coefficient recurrence. */
struct ParameterPole : Error {
  using Error::Error;
};

/** Requested expansion point is not a regular singular point. */
struct IrregularPoint : Error {
  using Error::Error;
};

/** Local exponents differ by a nonzero step multiple; basis would need
    resonant-log handling that this solver does not provide. */
struct ResonantExponents : Error {
  using Error::Error;
};

/** Series truncation order too small for the requested computation. */
struct TruncationError : Error {
  using Error::Error;
};

/** Adaptive summation failed to reach the target tail bound. */
struct ConvergenceError : Error {
  using Error::Error;
};

/** Working precision insufficient for the requested tolerance. */
struct PrecisionExhausted : Error {
  using Error::Error;
};

/** Continuation path passes too close to a singular point. */
struct StepTooClose : Error {
  using Error::Error;
};

/** delta is not in the admissible set of the sector. */
struct InadmissibleDelta : Error {
  using Error::Error;
};

/** Hypergeometric parameters reducible (upper equals lower mod 1). */
struct ReducibleParameters : Error {
  using Error::Error;
};

/** A verification check failed; message carries the first mismatch. */
struct VerificationFailed : Error {
  using Error::Error;
};

}  // namespace dwork
