#pragma once

#include <cstdint>

namespace hooksum {

/* Monte Carlo cross-checks of the Selberg-derived constants.
 *
 * All integrals live on the zero-sum hyperplane {sum x_i = 0} with the
 * Lebesgue measure of the first s-1 coordinates (x_s determined). Sampling
 * draws s iid standard normals and subtracts their mean, which is exactly
 * the standard Gaussian intrinsic to the hyperplane; expressed against the
 * projection measure its density carries a Jacobian factor sqrt(s). With
 * the sample scaled by 1/sqrt(b) to match an integrand e^{-(b/2) sum x^2},
 * the estimator for the symmetrized integral becomes
 *
 *     (2 pi / b)^{(s-1)/2} / sqrt(s) * E[ weight(X) ] / (symmetry factor),
 *
 * with only the polynomial |Vandermonde|^beta left inside the expectation.
 * The small-beta limit (pure Gaussian mass) pins the sqrt(s) convention.
 *
 * Reproducibility: a fixed chunk size (65536 samples), one SplitMix64 /
 * Box-Muller stream per chunk keyed by (seed, chunk index), partial sums
 * merged in chunk order. Bit-identical for a given (seed, samples),
 * whatever the worker count.
 */

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct McOptions {
    unsigned threads = 0;  // 0 = default_thread_count()
};

// Estimates I(s,beta) = integral over the ordered zero-sum domain of
// [|D_s(x)| e^{-1/2 sum x^2}]^beta; compare with exp(selberg_I(s, beta)).
// Requires 2 <= s <= 5, beta > 0, samples >= 10^4.
McEstimate mc_selberg(unsigned s, double beta, std::uint64_t samples,
                      std::uint64_t seed, const McOptions& opt = {});

enum class McMethod {
    direct,      // one (k+l-1)-dimensional estimate over P(k,l)
    factorized,  // closed-form Gaussian J times independent I_k, I_l runs
};

// Estimates I(k,l,2z); compare with exp(full_I(k, l, z)).
// Requires k, l >= 1, k + l <= 6, z > 0.
McEstimate mc_full_I(unsigned k, unsigned l, double z,
                     std::uint64_t samples, std::uint64_t seed,
                     McMethod method = McMethod::direct,
                     const McOptions& opt = {});

// J = sqrt(k l pi / (z (k+l)^2)), the Gaussian factor of the factorized
// form.
double gaussian_J(unsigned k, unsigned l, double z);

}  // namespace hooksum
