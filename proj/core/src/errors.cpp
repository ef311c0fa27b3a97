#include "expmart/errors.hpp"

#include <sstream>

namespace expmart {

namespace {

std::string overflow_message(std::complex<double> c, double x) {
  std::ostringstream os;
  os.precision(17);
  os << "exponential overflow: |c*x| > 700 for c = (" << c.real() << ", " << c.imag()
     << "), x = " << x;
  return os.str();
}

}  // namespace

OverflowError::OverflowError(std::complex<double> exponent, double x)
    : Error(overflow_message(exponent, x)), exponent_(exponent), x_(x) {}

}  // namespace expmart
