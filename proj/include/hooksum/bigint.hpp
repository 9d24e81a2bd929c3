#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace hooksum {

// Exact nonnegative integer (tableau counts, hook sums). GMP does the
// heavy lifting; these helpers keep call sites free of raw mpz_* calls.
using BigCount = mpz_class;

inline BigCount factorial(std::uint64_t n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigCount pow_ui(const BigCount& base, std::uint64_t e) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigCount pow2(std::uint64_t e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace hooksum
