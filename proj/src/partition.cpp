#include "hooksum/partition.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

namespace hooksum {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw DomainError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> conj(parts_[0]);
    for (unsigned j = 0; j < parts_[0]; ++j) {
        unsigned cnt = 0;
        for (unsigned p : parts_) {
            if (p > j)
                ++cnt;
            else
                break;
        }
        conj[j] = cnt;
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool in_hook(const Partition& p, HookShape shape) {
    return p.part(shape.k + 1) <= shape.l;
}

HookPartitionStream::HookPartitionStream(HookShape shape, std::uint64_t n)
    : shape_(shape), n_(n) {
    if (n > UINT_MAX) throw DomainError("n too large to enumerate");
}

// Greedily appends the lexicographically largest tail summing to rem with
// first part <= cap. Fails (restoring the prefix) only in the l = 0 case,
// where the row budget can run out.
bool HookPartitionStream::fill_greedy(unsigned cap, std::uint64_t rem) {
    const std::size_t base = parts_.size();
    if (shape_.l == 0) {
        if (base >= shape_.k) return false;
        if (rem > std::uint64_t(cap) * (shape_.k - base)) return false;
    }
    unsigned cur = cap;
    while (rem > 0) {
        unsigned lim = cur;
        if (parts_.size() >= shape_.k) lim = std::min(lim, shape_.l);
        unsigned take = static_cast<unsigned>(
            std::min<std::uint64_t>(lim, rem));
        if (take == 0) {
            parts_.resize(base);
            return false;
        }
        parts_.push_back(take);
        rem -= take;
        cur = take;
    }
    return true;
}

std::optional<Partition> HookPartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ == 0) return Partition{};
        unsigned cap = shape_.k >= 1
                           ? static_cast<unsigned>(std::min<std::uint64_t>(
                                 n_, UINT_MAX))
                           : std::min<unsigned>(
                                 shape_.l, static_cast<unsigned>(n_));
        if (cap == 0 || !fill_greedy(cap, n_)) {
            done_ = true;
            return std::nullopt;
        }
        return Partition(parts_);
    }
    // Backtrack: pop trailing rows, try to restart with last popped row
    // shrunk by one. Greedy refill is the lexicographic successor.
    std::uint64_t freed = 0;
    while (!parts_.empty()) {
        unsigned v = parts_.back();
        parts_.pop_back();
        freed += v;
        if (v >= 2 && fill_greedy(v - 1, freed)) return Partition(parts_);
    }
    done_ = true;
    return std::nullopt;
}

void enumerate_hook(HookShape shape, std::uint64_t n,
                    const std::function<bool(const Partition&)>& visit) {
    HookPartitionStream stream(shape, n);
    while (auto p = stream.next()) {
        if (!visit(*p)) return;
    }
}

std::vector<Partition> hook_partitions(HookShape shape, std::uint64_t n) {
    std::vector<Partition> out;
    enumerate_hook(shape, n, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

BigCount count_hook(HookShape shape, std::uint64_t n) {
    const unsigned k = shape.k, l = shape.l;
    const std::size_t N = static_cast<std::size_t>(n);
    // P[j][x] = partitions of x into at most j parts.
    const unsigned jmax = std::min<std::uint64_t>(std::max(k, l), n);
    std::vector<std::vector<BigCount>> P(jmax + 1,
                                         std::vector<BigCount>(N + 1));
    P[0][0] = 1;
    for (unsigned j = 1; j <= jmax; ++j) {
        for (std::size_t x = 0; x <= N; ++x) {
            P[j][x] = P[j - 1][x];
            if (x >= j) P[j][x] += P[j][x - j];
        }
    }
    auto at_most = [&](unsigned j, std::uint64_t x) -> const BigCount& {
        static const BigCount zero = 0;
        if (x > n) return zero;
        unsigned jj = std::min<std::uint64_t>(j, jmax);
        if (jj == 0) {
            static const BigCount one = 1;
            return x == 0 ? one : zero;
        }
        return P[jj][static_cast<std::size_t>(x)];
    };
    // Split lambda into the j parts exceeding l (j <= k, each >= l+1) and
    // the rest (parts <= l, i.e. at most l parts of the conjugate).
    BigCount total = 0;
    for (unsigned j = 0; j <= k; ++j) {
        std::uint64_t floor_cells = std::uint64_t(j) * (l + 1);
        if (floor_cells > n) break;
        for (std::uint64_t m = floor_cells; m <= n; ++m) {
            const BigCount& tall = at_most(j, m - floor_cells);
            if (tall == 0) continue;
            total += tall * at_most(l, n - m);
        }
    }
    return total;
}

HookDecomposition decompose(const Partition& p, HookShape shape) {
    const unsigned k = shape.k, l = shape.l;
    if (p.part(k + 1) > l)
        throw RectangleNotContained("more than k parts exceed l");
    if (k >= 1 && p.part(k) < l)
        throw RectangleNotContained("row k shorter than l");
    std::vector<unsigned> nu_parts;
    for (unsigned i = 1; i <= std::min<unsigned>(k, p.rows()); ++i) {
        unsigned v = p.part(i) - l;
        if (v > 0) nu_parts.push_back(v);
    }
    std::vector<unsigned> below(p.parts().begin() +
                                    std::min<std::size_t>(k, p.rows()),
                                p.parts().end());
    Partition mu = Partition(std::move(below)).conjugate();
    HookDecomposition d;
    d.nu = Partition(std::move(nu_parts));
    d.mu = std::move(mu);
    d.k = k;
    d.l = l;
    d.n_k = d.nu.n();
    d.n_l = d.mu.n();
    d.n_bar = d.n_k + d.n_l;
    return d;
}

Partition reassemble(const HookDecomposition& d) {
    std::vector<unsigned> parts;
    for (unsigned i = 1; i <= d.k; ++i) {
        unsigned v = d.nu.part(i) + d.l;
        if (v > 0) parts.push_back(v);
    }
    Partition below = d.mu.conjugate();
    parts.insert(parts.end(), below.parts().begin(), below.parts().end());
    return Partition(std::move(parts));
}

}  // namespace hooksum
