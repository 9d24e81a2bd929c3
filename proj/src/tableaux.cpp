#include "hooksum/tableaux.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hooksum/errors.hpp"
#include "hooksum/parallel.hpp"

namespace hooksum {

std::uint64_t HookLengthTable::cells() const {
    std::uint64_t c = 0;
    for (const auto& r : rows) c += r.size();
    return c;
}

HookLengthTable hook_lengths(const Partition& p) {
    HookLengthTable t;
    if (p.empty()) return t;
    const auto conj = p.conjugate();
    t.rows.resize(p.rows());
    for (unsigned i = 0; i < p.rows(); ++i) {
        const unsigned len = p.parts()[i];
        t.rows[i].resize(len);
        for (unsigned j = 0; j < len; ++j)
            t.rows[i][j] = len - j + conj.parts()[j] - i - 1;
    }
    return t;
}

BigCount f_lambda(const Partition& p) {
    const std::uint64_t n = p.n();
    if (n <= 1) return 1;
    const std::size_t N = static_cast<std::size_t>(n);

    std::vector<std::uint32_t> spf(N + 1, 0);  // smallest prime factor
    for (std::size_t i = 2; i <= N; ++i) {
        if (spf[i] != 0) continue;
        for (std::size_t m = i; m <= N; m += i)
            if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(i);
    }

    std::vector<std::int64_t> expo(N + 1, 0);
    for (std::size_t q = 2; q <= N; ++q) {
        if (spf[q] != q) continue;
        // Legendre: exponent of q in n!
        for (std::uint64_t pw = q; pw <= n; pw *= q) {
            expo[q] += static_cast<std::int64_t>(n / pw);
            if (pw > n / q) break;
        }
    }
    for (const auto& row : hook_lengths(p).rows) {
        for (unsigned h : row) {
            while (h > 1) {
                --expo[spf[h]];
                h /= spf[h];
            }
        }
    }

    BigCount result = 1, tmp;
    for (std::size_t q = 2; q <= N; ++q) {
        if (expo[q] == 0) continue;
        if (expo[q] < 0)
            throw std::logic_error(
                "hook-length product does not divide n! (bug)");
        mpz_ui_pow_ui(tmp.get_mpz_t(), q,
                      static_cast<unsigned long>(expo[q]));
        result *= tmp;
    }
    return result;
}

BigCount CornerRemovalOracle::count(const Partition& p) {
    if (p.n() > bound_)
        throw BoundExceeded("oracle bound " + std::to_string(bound_) +
                            " exceeded (n = " + std::to_string(p.n()) + ")");
    std::vector<unsigned> parts = p.parts();
    return count_impl(parts);
}

const BigCount& CornerRemovalOracle::count_impl(std::vector<unsigned>& parts) {
    auto it = memo_.find(parts);
    if (it != memo_.end()) return it->second;
    BigCount total = 0;
    if (parts.empty()) {
        total = 1;
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const bool corner =
                (i + 1 == parts.size()) || parts[i] > parts[i + 1];
            if (!corner) continue;
            if (parts[i] == 1) {
                parts.pop_back();
                total += count_impl(parts);
                parts.push_back(1);
            } else {
                --parts[i];
                total += count_impl(parts);
                ++parts[i];
            }
        }
    }
    return memo_.emplace(parts, std::move(total)).first->second;
}

BigCount f_lambda_oracle(const Partition& p, unsigned bound) {
    CornerRemovalOracle oracle(bound);
    return oracle.count(p);
}

namespace {

constexpr std::size_t kChunkSize = 256;

struct Chunk {
    std::uint64_t id = 0;
    std::vector<Partition> items;
};

BigCount chunk_power_sum(const Chunk& c, unsigned p) {
    BigCount sum = 0;
    for (const Partition& lam : c.items) {
        BigCount f = f_lambda(lam);
        if (p == 1)
            sum += f;
        else
            sum += pow_ui(f, p);
    }
    return sum;
}

BigCount hook_sum_sequential(HookShape shape, unsigned p, std::uint64_t n,
                             std::uint64_t work_limit) {
    HookPartitionStream stream(shape, n);
    BigCount sum = 0;
    std::uint64_t seen = 0;
    while (auto lam = stream.next()) {
        if (work_limit && ++seen > work_limit)
            throw WorkLimitExceeded(work_limit);
        BigCount f = f_lambda(*lam);
        sum += (p == 1) ? f : pow_ui(f, p);
    }
    return sum;
}

}  // namespace

BigCount hook_sum_exact(HookShape shape, unsigned p, std::uint64_t n,
                        const SumOptions& opt) {
    if (p < 1) throw DomainError("hook_sum_exact needs power p >= 1");
    const unsigned threads =
        opt.threads ? opt.threads : default_thread_count();
    if (threads <= 1 || n < 24)
        return hook_sum_sequential(shape, p, n, opt.work_limit);

    // Producer streams fixed-size chunks into a bounded queue; workers
    // compute per-chunk power sums; partials are merged in chunk order.
    std::mutex mx;
    std::condition_variable cv_space, cv_data;
    std::deque<Chunk> queue;
    const std::size_t cap = 2 * threads;
    bool closed = false;
    std::map<std::uint64_t, BigCount> partials;
    std::exception_ptr worker_error;

    auto worker = [&]() {
        for (;;) {
            Chunk c;
            {
                std::unique_lock lk(mx);
                cv_data.wait(lk, [&] { return closed || !queue.empty(); });
                if (queue.empty()) return;
                c = std::move(queue.front());
                queue.pop_front();
                cv_space.notify_one();
            }
            try {
                BigCount s = chunk_power_sum(c, p);
                std::lock_guard lk(mx);
                partials.emplace(c.id, std::move(s));
            } catch (...) {
                {
                    std::lock_guard lk(mx);
                    if (!worker_error)
                        worker_error = std::current_exception();
                }
                cv_space.notify_all();  // unblock the producer
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);

    bool limit_hit = false;
    {
        HookPartitionStream stream(shape, n);
        Chunk current;
        std::uint64_t next_id = 0, seen = 0;
        auto flush = [&](Chunk&& c) {
            std::unique_lock lk(mx);
            cv_space.wait(lk, [&] {
                return queue.size() < cap || worker_error;
            });
            if (worker_error) return false;
            queue.push_back(std::move(c));
            cv_data.notify_one();
            return true;
        };
        while (auto lam = stream.next()) {
            if (opt.work_limit && ++seen > opt.work_limit) {
                limit_hit = true;
                break;
            }
            current.items.push_back(std::move(*lam));
            if (current.items.size() == kChunkSize) {
                current.id = next_id++;
                if (!flush(std::move(current))) break;
                current = Chunk{};
            }
        }
        if (!limit_hit && !current.items.empty()) {
            current.id = next_id++;
            flush(std::move(current));
        }
    }
    {
        std::lock_guard lk(mx);
        closed = true;
        if (limit_hit) queue.clear();
    }
    cv_data.notify_all();
    for (auto& t : pool) t.join();

    if (limit_hit) throw WorkLimitExceeded(opt.work_limit);
    if (worker_error) std::rethrow_exception(worker_error);

    BigCount sum = 0;
    for (auto& [id, s] : partials) sum += s;  // map iterates in id order
    return sum;
}

BigCount s11_closed(unsigned p, std::uint64_t n) {
    if (n < 1) throw DomainError("s11_closed needs n >= 1");
    if (p == 1) return pow2(n - 1);
    if (p == 2) return binomial(2 * (n - 1), n - 1);
    throw UnsupportedPower("s11_closed supports p = 1 or 2 only");
}

BigCount binomial_sum_s21(std::uint64_t n) {
    if (n < 1) throw DomainError("binomial_sum_s21 needs n >= 1");
    BigCount sum = 0;
    for (std::uint64_t j = 1; 2 * j <= n; ++j)
        sum += binomial(n, j) * binomial(n - j, j);
    return sum;
}

namespace detail {

BigCount s21_two_sums(std::uint64_t n) {
    BigCount first = 0;
    for (std::uint64_t r = 0; r < n; ++r)
        first += binomial(n - r, (n - r) / 2) * binomial(n, r);
    BigCount second = 0;
    // empty when n/2 - 1 < 1
    for (std::uint64_t k = 1; n / 2 >= 2 && k <= n / 2 - 1; ++k) {
        BigCount den = factorial(k) * factorial(k + 1) *
                       factorial(n - 2 * k - 2);
        den *= n - k - 1;
        den *= n - k;
        BigCount num = factorial(n);
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::logic_error("s21 term not an integer (bug)");
        BigCount term;
        mpz_divexact(term.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        second += term;
    }
    return first + second;
}

}  // namespace detail

BigCount s21_closed(std::uint64_t n) {
    if (n < 2) throw DomainError("s21_closed needs n >= 2");
    BigCount sums = detail::s21_two_sums(n);
    if (!mpz_divisible_ui_p(sums.get_mpz_t(), 4))
        throw std::logic_error("s21 sums not divisible by 4 (bug)");
    BigCount q;
    mpz_divexact_ui(q.get_mpz_t(), sums.get_mpz_t(), 4);
    return q + 1;
}

IdentityCheck motzkin_identity_check(std::uint64_t n) {
    if (n < 2) throw DomainError("motzkin_identity_check needs n >= 2");
    IdentityCheck c;
    c.lhs = 2 * binomial_sum_s21(n);
    c.rhs = detail::s21_two_sums(n);
    c.holds = (c.lhs == c.rhs);
    return c;
}

}  // namespace hooksum
