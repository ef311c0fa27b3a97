#include "expmart/algebra/scalar.hpp"

#include "expmart/errors.hpp"

namespace expmart::algebra {

Variance::Variance(double q) : q_(q) {
  if (!std::isfinite(q) || q < 0.0) {
    throw InvalidInput("quadratic variation must be finite and non-negative");
  }
}

}  // namespace expmart::algebra
