#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "hooksum/errors.hpp"
#include "hooksum/partition.hpp"

namespace hooksum {

/* Closed-form growth laws for the hook sums and for a single tableau count.
 *
 * Everything is assembled and kept in log space: the sums grow like
 * (k+l)^{2zn}, which leaves the double range around n of a few hundred.
 * Exponentiation happens only in evaluate() or when a constant is known to
 * be of order one.
 */

// a * n^{-g} * base^n, stored as (ln a, g, ln base).
struct AsymptoticForm {
    double log_a = 0.0;
    double g = 0.0;
    double log_base = 0.0;

    double log_evaluate(std::uint64_t n) const {
        if (n < 1) throw DomainError("evaluate needs n >= 1");
        return log_a + static_cast<double>(n) * log_base -
               g * std::log(static_cast<double>(n));
    }
    double evaluate(std::uint64_t n) const {
        return std::exp(log_evaluate(n));
    }
};

// Power of 1/n in the hook-sum law:
//   g(k,l,2z) = (z [k(k+1) + l(l+1) - 2] - (k + l - 1)) / 2
double g_hook(unsigned k, unsigned l, double z);

// ln a(k,l,2z), the full constant of the hook-sum law. The assembly keeps
// rational coefficients on a small set of logarithm atoms merged by value,
// so special cases cancel exactly (a(1,1,1) comes out as exactly ln(1/2)).
double log_a_hook(unsigned k, unsigned l, double z);

// ln a(k,l,1): the simplified 2z = 1 product with Gamma(1 + i/2) factors.
// Agrees with log_a_hook(k, l, 1/2) to 1e-12.
double log_a_hook_half(unsigned k, unsigned l);

// The l = 0 ancestor: S_k^{(2z)}(n) ~ a(k,2z) n^{-g(k,z)} k^{2zn}.
AsymptoticForm strip_asymptotics(unsigned k, double z);

// Single-shape prefactor and 1/n power:
//   c(k,l) = (2 pi)^{-(k+l-1)/2} 2^{-kl} (k+l)^{(k^2+l^2)/2}
//   theta(k,l) = [k(k+1) + l(l+1) - 2] / 4
struct CTheta {
    double log_c = 0.0;
    double theta = 0.0;
};
CTheta c_theta(unsigned k, unsigned l);

// ln Psi_s^{(beta)}, the Selberg product
//   (2 pi)^{s/2} beta^{-s/2 - beta s(s-1)/4} Gamma(1+beta/2)^{-s}
//   prod_{j=1..s} Gamma(1 + beta j / 2).
double psi_selberg(unsigned s, double beta);

// ln I(s,beta) = ln [ (1/s!) (1/sqrt s) sqrt(beta/(2 pi)) Psi_s^{(beta)} ],
// the Gaussian-weighted |Vandermonde|^beta integral over the ordered
// zero-sum domain (measure: Lebesgue in the first s-1 coordinates).
double selberg_I(unsigned s, double beta);

// ln I_k^{(2z)} = -[k(k-1)z + k - 1]/2 * ln(k+l) + ln I(k, 2z); the inner
// integral with per-coordinate weight e^{-(k+l)/2 x^2}. Call with (l, k, z)
// for the l-side factor.
double scaled_I_k(unsigned k, unsigned l, double z);

// ln I(k,l,2z). Computed by two independent routes (Gaussian-factorized
// product and the cancelled closed form) which must agree to 1e-12.
double full_I(unsigned k, unsigned l, double z);

// The assembled law S_{k,l}^{(2z)}(n) ~ a n^{-g} (k+l)^{2zn}, with internal
// consistency checks g = 2z theta - (k+l-1)/2 and ln a = 2z ln c + ln I.
AsymptoticForm hook_asymptotic(unsigned k, unsigned l, double z);

// Row coordinates scaled around the common center n_bar/(k+l):
//   alpha_i = (nu_i - n_bar/(k+l)) / sqrt(n_bar),   beta_j likewise,
// plus the per-block strip coordinates a_i, b_j obtained from the limit
// maps a_i = (alpha_i - alpha/k) sqrt((k+l)/k), b_j = (beta_j + alpha/l)
// sqrt((k+l)/l).
struct ScaledCoordinates {
    std::vector<double> alpha;
    std::vector<double> beta;
    double alpha_sum = 0.0;
    std::vector<double> a;
    std::vector<double> b;
};

ScaledCoordinates coords_from_decomposition(const HookDecomposition& d);

// ln of c(k,l) D_k(alpha) D_l(beta) e^{-(k+l)/2 (sum alpha^2 + sum beta^2)}
//        n^{-theta} (k+l)^n.
// Throws DegenerateShape when two alphas (or betas) coincide; the estimate
// degenerates to 0 there and a -inf sentinel is deliberately not returned.
double single_f_hook_estimate(const HookDecomposition& d,
                              const ScaledCoordinates& coords,
                              std::uint64_t n);

// Strip analogue: ln of gamma_k D_k(a) e^{-(k/2) sum a^2}
//                       n^{-(k-1)(k+2)/4} k^n.
double single_f_strip_estimate(unsigned k, std::span<const double> a_coords,
                               std::uint64_t n);

namespace detail {
// Raw formula evaluators that admit l = 0 (empty second block, 0! = 1).
// The public entry points require k, l >= 1; the strip-reduction tests
// substitute l = 0 here directly.
double log_a_hook_any(unsigned k, unsigned l, double z);
double g_hook_any(unsigned k, unsigned l, double z);
// The two routes behind full_I.
double full_I_product(unsigned k, unsigned l, double z);
double full_I_closed(unsigned k, unsigned l, double z);
// ln gamma_k = -(k-1)/2 ln(2 pi) + (k^2/2) ln k.
double strip_gamma_log(unsigned k);
}  // namespace detail

}  // namespace hooksum
