#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hooksum/partition.hpp"

namespace hooksum {

/* Exact-vs-asymptote convergence harnesses. */

struct RatioRow {
    std::uint64_t n = 0;
    double exact_log = 0.0;
    double asym_log = 0.0;
    double ratio = 0.0;  // exp(exact_log - asym_log)
};

enum class RatioMode {
    enumerate_sum,  // exact side by hook enumeration, bounded by work_limit
    closed_form,    // exact side by a known closed form:
                    // (1,1,1), (1,1,2), (2,1,1) only
};

// One row per n (sorted ascending): exact log of S_{k,l}^{(p)}(n), the
// asymptote's log, and their ratio.
std::vector<RatioRow> ratio_table(unsigned k, unsigned l, unsigned p,
                                  std::span<const std::uint64_t> ns,
                                  RatioMode mode,
                                  std::uint64_t work_limit = 10'000'000);

// The (2,1) convergence statistic
//   lhs(n) = 2 sqrt(n) / 3^n * sum_{j>=1} C(n,j) C(n-j,j),
// exact big-integer sum, one log-space division; tends to sqrt(3/pi).
double lhs_221(std::uint64_t n);

// Ratio exp(log estimate - log f^lambda) along deterministic near-balanced
// shapes, one per n. l = 0 selects the strip estimator. Shapes use a
// unit-spaced ladder in scaled coordinates so the Vandermonde factor stays
// bounded away from zero.
std::vector<std::pair<std::uint64_t, double>> single_f_convergence(
    unsigned k, unsigned l, std::span<const std::uint64_t> ns);

namespace detail {
// Deterministic ladder shapes behind single_f_convergence.
Partition strip_ladder_shape(unsigned k, std::uint64_t n);
Partition balanced_hook_shape(unsigned k, unsigned l, std::uint64_t n);
}  // namespace detail

}  // namespace hooksum
