#include "hooksum/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hooksum/errors.hpp"

namespace hooksum {

namespace {

// Lanczos g = 7, N = 9 (P. Godfrey's table, the one Boost.Math and the
// GNU Scientific Library literature quote for double precision).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosC = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma needs x > 0");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double xm1 = x - 1.0;
    double acc = kLanczosC[0];
    for (std::size_t i = 1; i < kLanczosC.size(); ++i)
        acc += kLanczosC[i] / (xm1 + static_cast<double>(i));
    const double t = xm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) +
           (xm1 + 0.5) * std::log(t) - t + std::log(acc);
}

double gamma(double x) {
    const double lg = log_gamma(x);
    if (lg > 709.0) throw OverflowError("gamma overflows double range");
    return std::exp(lg);
}

double log_big(const BigCount& b) {
    if (b <= 0) throw DomainError("log_big needs a positive integer");
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, b.get_mpz_t());  // d in [0.5, 1)
    return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace hooksum
