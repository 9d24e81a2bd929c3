#include "hooksum/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "hooksum/asymptotics.hpp"
#include "hooksum/errors.hpp"
#include "hooksum/special_functions.hpp"
#include "hooksum/tableaux.hpp"

namespace hooksum {

namespace {

// count rows summing to total, row i near total/count + offset_i * spread
// with the unit-spaced zero-sum ladder offset_i = (count - 1 - 2i)/2.
// Rounding remainder goes to the earlier rows.
std::vector<unsigned> ladder_parts(unsigned count, std::uint64_t total,
                                   double spread) {
    if (count == 0) {
        if (total != 0)
            throw DomainError("cannot place a positive total in 0 rows");
        return {};
    }
    std::vector<std::int64_t> v(count);
    std::int64_t placed = 0;
    for (unsigned i = 0; i < count; ++i) {
        const double offset =
            (static_cast<double>(count) - 1.0 - 2.0 * i) / 2.0;
        const double target =
            static_cast<double>(total) / count + offset * spread;
        v[i] = static_cast<std::int64_t>(std::floor(target));
        placed += v[i];
    }
    std::int64_t rem = static_cast<std::int64_t>(total) - placed;
    for (unsigned i = 0; rem > 0; i = (i + 1) % count, --rem) ++v[i];
    for (unsigned i = count; rem < 0; i = (i == 1 ? count : i - 1), ++rem)
        --v[i - 1];
    std::vector<unsigned> parts(count);
    for (unsigned i = 0; i < count; ++i) {
        if (v[i] < 1 || (i + 1 < count && v[i] < v[i + 1]))
            throw DomainError("n too small for a ladder-balanced shape");
        parts[i] = static_cast<unsigned>(v[i]);
    }
    return parts;
}

BigCount closed_form_sum(unsigned k, unsigned l, unsigned p,
                         std::uint64_t n) {
    if (k == 1 && l == 1) return s11_closed(p, n);
    return s21_closed(n);  // (2,1,1), validated by the caller
}

}  // namespace

namespace detail {

Partition strip_ladder_shape(unsigned k, std::uint64_t n) {
    if (k < 1) throw DomainError("strip shape needs k >= 1");
    return Partition(
        ladder_parts(k, n, std::sqrt(static_cast<double>(n))));
}

Partition balanced_hook_shape(unsigned k, unsigned l, std::uint64_t n) {
    if (k < 1 || l < 1) throw DomainError("hook shape needs k, l >= 1");
    if (n <= static_cast<std::uint64_t>(k) * l)
        throw DomainError("n too small to contain the k x l rectangle");
    const std::uint64_t nbar = n - static_cast<std::uint64_t>(k) * l;
    // round-half-up share proportional to k (ties to the earlier block)
    const std::uint64_t nk =
        (2 * static_cast<std::uint64_t>(k) * nbar + (k + l)) /
        (2 * static_cast<std::uint64_t>(k + l));
    const double spread = std::sqrt(static_cast<double>(nbar));
    HookDecomposition d;
    d.nu = Partition(ladder_parts(k, nk, spread));
    d.mu = Partition(ladder_parts(l, nbar - nk, spread));
    d.k = k;
    d.l = l;
    d.n_k = nk;
    d.n_l = nbar - nk;
    d.n_bar = nbar;
    return reassemble(d);
}

}  // namespace detail

std::vector<RatioRow> ratio_table(unsigned k, unsigned l, unsigned p,
                                  std::span<const std::uint64_t> ns,
                                  RatioMode mode, std::uint64_t work_limit) {
    if (p < 1) throw DomainError("ratio_table needs power p >= 1");
    if (mode == RatioMode::closed_form) {
        const bool known = (k == 1 && l == 1 && (p == 1 || p == 2)) ||
                           (k == 2 && l == 1 && p == 1);
        if (!known)
            throw UnsupportedClosedForm(
                "closed form known only for (k,l,p) = (1,1,1), (1,1,2), "
                "(2,1,1)");
    }
    const AsymptoticForm form =
        hook_asymptotic(k, l, static_cast<double>(p) / 2.0);

    std::vector<std::uint64_t> sorted(ns.begin(), ns.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<RatioRow> rows;
    rows.reserve(sorted.size());
    for (std::uint64_t n : sorted) {
        BigCount exact =
            mode == RatioMode::closed_form
                ? closed_form_sum(k, l, p, n)
                : hook_sum_exact(HookShape(k, l), p, n,
                                 SumOptions{.work_limit = work_limit});
        RatioRow r;
        r.n = n;
        r.exact_log = log_big(exact);
        r.asym_log = form.log_evaluate(n);
        r.ratio = std::exp(r.exact_log - r.asym_log);
        rows.push_back(r);
    }
    return rows;
}

double lhs_221(std::uint64_t n) {
    if (n < 2) throw DomainError("lhs_221 needs n >= 2");
    const double lg = std::log(2.0) +
                      0.5 * std::log(static_cast<double>(n)) +
                      log_big(binomial_sum_s21(n)) -
                      static_cast<double>(n) * std::log(3.0);
    return std::exp(lg);
}

std::vector<std::pair<std::uint64_t, double>> single_f_convergence(
    unsigned k, unsigned l, std::span<const std::uint64_t> ns) {
    if (k < 1) throw DomainError("single_f_convergence needs k >= 1");
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(ns.size());
    for (std::uint64_t n : ns) {
        double est, exact_log;
        if (l == 0) {
            const Partition nu = detail::strip_ladder_shape(k, n);
            std::vector<double> a(k);
            const double sq = std::sqrt(static_cast<double>(n));
            for (unsigned i = 0; i < k; ++i)
                a[i] = (static_cast<double>(nu.part(i + 1)) -
                        static_cast<double>(n) / k) /
                       sq;
            est = single_f_strip_estimate(k, a, n);
            exact_log = log_big(f_lambda(nu));
        } else {
            const Partition lam = detail::balanced_hook_shape(k, l, n);
            const HookDecomposition d = decompose(lam, HookShape(k, l));
            const ScaledCoordinates coords = coords_from_decomposition(d);
            est = single_f_hook_estimate(d, coords, n);
            exact_log = log_big(f_lambda(lam));
        }
        out.emplace_back(n, std::exp(est - exact_log));
    }
    return out;
}

}  // namespace hooksum
