#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iwqm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Bra/ket sets combined in a way the pairing does not define.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A quadrature rule is too small to integrate the requested polynomial exactly.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Fock truncation error exceeds the configured budget.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Numerical result disagrees with its closed form beyond tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

class BoundaryLeakError : public Error {
 public:
  using Error::Error;
};

class NormDriftError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace iwqm
