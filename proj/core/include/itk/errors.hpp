#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace itk {

// Common base so callers can catch every toolkit failure with one handler.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inversion requested for an element of positive (or unknown) valuation.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

// A construction would need coefficients at or beyond the X^M cutoff.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

// Every coefficient vanishes at its known precision; the requested
// quantity is undefined for the zero class.
class IndistinguishableFromZero : public Error {
 public:
  using Error::Error;
};

// The tracked precision is too low to certify the result.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

// A structural precondition on a module descriptor does not hold.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

// Characteristic-ideal request on a module with positive free rank.
class NotTorsion : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Input document does not have the documented shape (missing field,
// wrong type, unknown schema version).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Input document parses but violates a named invariant.  The invariant
// name is machine-checkable; the message elaborates.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, std::string detail)
      : Error(invariant + ": " + detail),
        invariant_(std::move(invariant)),
        detail_(std::move(detail)) {}
  const std::string& invariant() const { return invariant_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string invariant_;
  std::string detail_;
};

class DecreasingRank : public ValidationError {
 public:
  explicit DecreasingRank(const std::string& detail)
      : ValidationError("DecreasingRank", detail) {}
};

class NonIntegralJump : public ValidationError {
 public:
  explicit NonIntegralJump(const std::string& detail)
      : ValidationError("NonIntegralJump", detail) {}
};

class ApNonzero : public ValidationError {
 public:
  explicit ApNonzero(const std::string& detail)
      : ValidationError("ApNonzero", detail) {}
};

}  // namespace itk
