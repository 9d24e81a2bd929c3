#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "hooksum/partition.hpp"

using namespace hooksum;

namespace {

// Independent brute-force generator of all partitions of n, used as the
// oracle against the constrained enumerator.
void all_partitions_rec(unsigned rem, unsigned maxp,
                        std::vector<unsigned>& cur,
                        std::vector<std::vector<unsigned>>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(rem, maxp); p >= 1; --p) {
        cur.push_back(p);
        all_partitions_rec(rem - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<unsigned>> all_partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    all_partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

}  // namespace

TEST_CASE("enumerate_hook small examples") {
    auto got = hook_partitions(HookShape(1, 1), 3);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == Partition({3}));
    CHECK(got[1] == Partition({2, 1}));
    CHECK(got[2] == Partition({1, 1, 1}));

    auto strip = hook_partitions(HookShape(2, 0), 4);
    REQUIRE(strip.size() == 3);
    CHECK(strip[0] == Partition({4}));
    CHECK(strip[1] == Partition({3, 1}));
    CHECK(strip[2] == Partition({2, 2}));

    auto col = hook_partitions(HookShape(0, 1), 3);
    REQUIRE(col.size() == 1);
    CHECK(col[0] == Partition({1, 1, 1}));
}

TEST_CASE("enumerate_hook (2,1,5) matches brute-force filter") {
    auto got = hook_partitions(HookShape(2, 1), 5);
    std::set<std::vector<unsigned>> expect;
    for (const auto& p : all_partitions(5)) {
        if (p.size() <= 2 || p[2] <= 1) expect.insert(p);
    }
    CHECK(expect.size() == 7);  // every partition of 5 qualifies
    CHECK(got.size() == expect.size());
    for (const auto& p : got) CHECK(expect.count(p.parts()) == 1);
}

TEST_CASE("enumerate_hook n = 0 yields the empty partition once") {
    auto got = hook_partitions(HookShape(2, 1), 0);
    REQUIRE(got.size() == 1);
    CHECK(got[0].empty());
}

TEST_CASE("enumeration is lex-decreasing, distinct, in the hook") {
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned l = 0; l <= 4; ++l) {
            if (k == 0 && l == 0) continue;
            for (std::uint64_t n = 0; n <= 25; ++n) {
                auto got = hook_partitions(HookShape(k, l), n);
                for (std::size_t i = 0; i < got.size(); ++i) {
                    CHECK(got[i].n() == n);
                    CHECK(in_hook(got[i], HookShape(k, l)));
                    if (i + 1 < got.size())
                        CHECK(got[i + 1] < got[i]);  // strict: distinct too
                }
            }
        }
    }
}

TEST_CASE("count_hook examples and agreement with enumeration") {
    CHECK(count_hook(HookShape(1, 1), 5) == 5);
    CHECK(count_hook(HookShape(0, 1), 3) == 1);
    CHECK(count_hook(HookShape(3, 3), 4) == 5);

    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned l = 0; l <= 4; ++l) {
            if (k == 0 && l == 0) continue;
            for (std::uint64_t n = 0; n <= 25; ++n) {
                std::uint64_t streamed = 0;
                enumerate_hook(HookShape(k, l), n, [&](const Partition&) {
                    ++streamed;
                    return true;
                });
                CHECK(count_hook(HookShape(k, l), n) == streamed);
            }
        }
    }
}

TEST_CASE("conjugate examples and involution") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));

    for (unsigned n = 0; n <= 16; ++n) {
        for (const auto& parts : all_partitions(n)) {
            Partition p(parts);
            CHECK(p.conjugate().conjugate() == p);
        }
    }
}

TEST_CASE("hook membership is conjugation-dual") {
    for (std::uint64_t n = 0; n <= 20; ++n) {
        for (const auto& parts : all_partitions(static_cast<unsigned>(n))) {
            Partition p(parts);
            for (unsigned k = 0; k <= 3; ++k) {
                for (unsigned l = 0; l <= 3; ++l) {
                    if (k == 0 && l == 0) continue;
                    CHECK(in_hook(p, HookShape(k, l)) ==
                          in_hook(p.conjugate(), HookShape(l, k)));
                }
            }
        }
    }
}

TEST_CASE("decompose examples") {
    auto d = decompose(Partition({4, 2, 1, 1}), HookShape(2, 1));
    CHECK(d.nu == Partition({3, 1}));
    CHECK(d.mu == Partition({2}));
    CHECK(d.n_k == 4);
    CHECK(d.n_l == 2);
    CHECK(d.n_bar == 6);

    auto d2 = decompose(Partition({1, 1}), HookShape(1, 1));
    CHECK(d2.nu == Partition{});
    CHECK(d2.mu == Partition({1}));

    CHECK_THROWS_AS(decompose(Partition({2}), HookShape(2, 1)),
                    RectangleNotContained);
    CHECK_THROWS_AS(decompose(Partition({2, 2, 2}), HookShape(1, 1)),
                    RectangleNotContained);
}

TEST_CASE("decompose + reassemble round-trips") {
    for (unsigned k = 1; k <= 3; ++k) {
        for (unsigned l = 1; l <= 3; ++l) {
            for (std::uint64_t n = 0; n <= 25; ++n) {
                for (const auto& lam :
                     hook_partitions(HookShape(k, l), n)) {
                    if (lam.part(k) < l) continue;  // rectangle missing
                    auto d = decompose(lam, HookShape(k, l));
                    CHECK(d.n_k + d.n_l +
                              static_cast<std::uint64_t>(k) * l ==
                          n);
                    CHECK(d.n_bar ==
                          n - static_cast<std::uint64_t>(k) * l);
                    CHECK(reassemble(d) == lam);
                }
            }
        }
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK_THROWS_AS(HookShape(0, 0), DomainError);
    CHECK(Partition({5, 3, 3, 1}).n() == 12);
    CHECK(Partition({5, 3, 3, 1}).part(2) == 3);
    CHECK(Partition({5, 3, 3, 1}).part(9) == 0);
}
