#pragma once

#include "hooksum/bigint.hpp"
#include "hooksum/errors.hpp"

namespace hooksum {

// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9-term Godfrey
// coefficient table), relative error of exp(log_gamma(x)) below 1e-13 on
// (0, 50]. Deliberately not std::lgamma: a fixed coefficient set keeps the
// constants bit-reproducible across toolchains.
double log_gamma(double x);

// Gamma(x) = exp(log_gamma(x)); throws OverflowError once the result leaves
// the double range.
double gamma(double x);

// Natural log of a positive big integer from its leading 53 bits plus bit
// length; relative error ~1e-15, well inside the 1e-12 contract.
double log_big(const BigCount& b);

}  // namespace hooksum
