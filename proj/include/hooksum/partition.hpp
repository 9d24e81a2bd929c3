#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hooksum/bigint.hpp"
#include "hooksum/errors.hpp"

namespace hooksum {

/* Integer partitions and the (k,l) hook family
 *
 *   H(k,l;n) = { lambda |- n : lambda_{k+1} <= l }
 *
 * i.e. at most k rows longer than l, everything below row k confined to the
 * first l columns. Enumeration is in lexicographically decreasing part
 * order, which makes chunked summation over the stream reproducible.
 */

class Partition {
  public:
    Partition() = default;
    // parts must be weakly decreasing and positive.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::uint64_t n() const { return n_; }
    unsigned rows() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row length; rows beyond the diagram have length 0.
    unsigned part(unsigned i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const;
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<unsigned> parts_;
    std::uint64_t n_ = 0;
};

struct HookShape {
    unsigned k = 0;
    unsigned l = 0;
    HookShape(unsigned k, unsigned l) : k(k), l(l) {
        if (k == 0 && l == 0) throw DomainError("hook shape needs k + l >= 1");
    }
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

bool in_hook(const Partition& p, HookShape shape);

// Streams H(k,l;n) in lexicographically decreasing order, one partition per
// next() call. State is an explicit prefix stack, so the stream can be
// consumed incrementally (chunked workers, work limits).
class HookPartitionStream {
  public:
    HookPartitionStream(HookShape shape, std::uint64_t n);
    std::optional<Partition> next();

  private:
    bool fill_greedy(unsigned cap, std::uint64_t rem);

    HookShape shape_;
    std::uint64_t n_;
    std::vector<unsigned> parts_;
    bool started_ = false;
    bool done_ = false;
};

// Visits every partition in H(k,l;n); the visitor returns false to stop.
void enumerate_hook(HookShape shape, std::uint64_t n,
                    const std::function<bool(const Partition&)>& visit);

std::vector<Partition> hook_partitions(HookShape shape, std::uint64_t n);

// |H(k,l;n)| by a bounded-parts dynamic program, independent of the
// enumerator (cross-check surface).
BigCount count_hook(HookShape shape, std::uint64_t n);

// lambda = nu + R_{k,l} + mu', valid when lambda contains the k x l
// rectangle. n = n_k + n_l + k*l, n_bar = n - k*l.
struct HookDecomposition {
    Partition nu;   // at most k parts (rows 1..k minus l columns)
    Partition mu;   // at most l parts (conjugate of the rows below k)
    unsigned k = 0;
    unsigned l = 0;
    std::uint64_t n_k = 0;
    std::uint64_t n_l = 0;
    std::uint64_t n_bar = 0;
};

// Throws RectangleNotContained if p_k < l or p has more than k parts
// exceeding l.
HookDecomposition decompose(const Partition& p, HookShape shape);

// Inverse of decompose (exact; used by the round-trip property tests).
Partition reassemble(const HookDecomposition& d);

}  // namespace hooksum
