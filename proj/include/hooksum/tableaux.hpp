#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hooksum/bigint.hpp"
#include "hooksum/partition.hpp"

namespace hooksum {

/* Exact standard-Young-tableau counts and the hook power sums
 *
 *   S_{k,l}^{(p)}(n) = sum over lambda in H(k,l;n) of (f^lambda)^p
 *
 * for positive integer p, all with exact big integers.
 */

struct HookLengthTable {
    // rows[i][j] = hook length at cell (i, j), same ragged shape as lambda.
    std::vector<std::vector<unsigned>> rows;
    std::uint64_t cells() const;
};

HookLengthTable hook_lengths(const Partition& p);

// f^lambda = n! / prod(hook lengths), computed as a product of prime powers
// (prime exponents of n! minus those of the hooks) so no n!-sized
// intermediate ever exists. A negative exponent cannot happen for a valid
// partition and aborts via std::logic_error.
BigCount f_lambda(const Partition& p);

// Independent oracle: corner-removal recursion
// f^lambda = sum over removable corners of f^(lambda - corner), memoized.
class CornerRemovalOracle {
  public:
    explicit CornerRemovalOracle(unsigned bound = 30) : bound_(bound) {}
    // Throws BoundExceeded if p.n() > bound.
    BigCount count(const Partition& p);

  private:
    const BigCount& count_impl(std::vector<unsigned>& parts);
    unsigned bound_;
    std::map<std::vector<unsigned>, BigCount> memo_;
};

BigCount f_lambda_oracle(const Partition& p, unsigned bound = 30);

struct SumOptions {
    unsigned threads = 0;          // 0 = default_thread_count()
    std::uint64_t work_limit = 0;  // 0 = unlimited; else max partitions
};

// Exact S_{k,l}^{(p)}(n). The stream is split into fixed-size chunks whose
// partial sums are combined in chunk order, so the value is independent of
// the worker count.
BigCount hook_sum_exact(HookShape shape, unsigned p, std::uint64_t n,
                        const SumOptions& opt = {});

// S_{1,1}^{(1)}(n) = 2^(n-1); S_{1,1}^{(2)}(n) = C(2(n-1), n-1).
BigCount s11_closed(unsigned p, std::uint64_t n);

// Four-term closed form for S_{2,1}^{(1)}(n), n >= 2.
BigCount s21_closed(std::uint64_t n);

// sum_{j>=1} C(n,j) C(n-j,j); S_{2,1}^{(1)}(n) = sum/2 + 1.
BigCount binomial_sum_s21(std::uint64_t n);

struct IdentityCheck {
    BigCount lhs;
    BigCount rhs;
    bool holds = false;
};

// 2*sum_{j>=1} C(n,j) C(n-j,j)  vs  the two-sum expression, both exact.
IdentityCheck motzkin_identity_check(std::uint64_t n);

namespace detail {
// The two-sum right-hand side shared by s21_closed and the identity check.
BigCount s21_two_sums(std::uint64_t n);
}  // namespace detail

}  // namespace hooksum
