#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace expmart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or out-of-domain arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operands that cannot be combined, e.g. elements living at different
/// quadratic-variation values.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

class InvalidTimeChange : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Raised instead of saturating when exp(c*x) would leave the double range.
class OverflowError : public Error {
 public:
  OverflowError(std::complex<double> exponent, double x);

  std::complex<double> exponent() const noexcept { return exponent_; }
  double x() const noexcept { return x_; }

 private:
  std::complex<double> exponent_;
  double x_;
};

}  // namespace expmart
