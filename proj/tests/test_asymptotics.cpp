#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "hooksum/asymptotics.hpp"
#include "hooksum/special_functions.hpp"
#include "hooksum/tableaux.hpp"

using namespace hooksum;
using std::numbers::pi;

TEST_CASE("g_hook reference values") {
    CHECK(g_hook(1, 1, 0.5) == 0.0);
    CHECK(g_hook(2, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g_hook(1, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(g_hook(0, 1, 0.5), DomainError);
    CHECK_THROWS_AS(g_hook(1, 1, 0.0), DomainError);
}

TEST_CASE("log_a_hook reference values") {
    // a(1,1,1) = 1/2, and the atom assembly lands on ln(1/2) exactly
    CHECK(log_a_hook(1, 1, 0.5) == std::log(0.5));
    CHECK(std::exp(log_a_hook(2, 1, 0.5)) ==
          doctest::Approx(0.25 * std::sqrt(3.0 / pi)).epsilon(1e-12));
    CHECK(std::exp(log_a_hook(1, 1, 1.0)) ==
          doctest::Approx(1.0 / (4.0 * std::sqrt(pi))).epsilon(1e-12));
}

TEST_CASE("log_a_hook is symmetric in (k,l)") {
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned l = 1; l <= 4; ++l)
            for (double z : {0.5, 1.0, 1.5}) {
                CHECK(log_a_hook(k, l, z) == log_a_hook(l, k, z));
                CHECK(g_hook(k, l, z) == g_hook(l, k, z));
            }
}

TEST_CASE("2z = 1 specialization") {
    CHECK(log_a_hook_half(1, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
    CHECK(std::exp(log_a_hook_half(2, 1)) ==
          doctest::Approx(0.2443012559514600).epsilon(1e-12));
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned l = 1; l <= 4; ++l) {
            CHECK(std::fabs(log_a_hook_half(k, l) - log_a_hook(k, l, 0.5)) <=
                  1e-12);
            CHECK(log_a_hook_half(k, l) == log_a_hook_half(l, k));
        }
}

TEST_CASE("strip asymptotics") {
    // k = 1: the sum is identically 1
    for (double z : {0.25, 0.5, 1.0, 3.0}) {
        auto f = strip_asymptotics(1, z);
        CHECK(f.log_a == 0.0);
        CHECK(f.g == 0.0);
        CHECK(f.log_base == 0.0);
        CHECK(f.evaluate(17) == 1.0);
    }
    CHECK(strip_asymptotics(2, 1.0).g == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(std::exp(strip_asymptotics(2, 0.5).log_a) ==
          doctest::Approx(0.79788456080286536).epsilon(1e-12));
    CHECK_THROWS_AS(strip_asymptotics(0, 1.0), DomainError);
}

TEST_CASE("hook formulas reduce to the strip at l = 0") {
    for (unsigned k = 1; k <= 3; ++k) {
        for (double z : {0.5, 1.0}) {
            auto strip = strip_asymptotics(k, z);
            CHECK(std::fabs(detail::log_a_hook_any(k, 0, z) - strip.log_a) <=
                  1e-10);
            CHECK(std::fabs(detail::g_hook_any(k, 0, z) - strip.g) <= 1e-10);
            CHECK(std::fabs(2.0 * z * std::log(double(k)) - strip.log_base) <=
                  1e-12);
        }
    }
}

TEST_CASE("c_theta") {
    auto ct = c_theta(1, 1);
    CHECK(std::exp(ct.log_c) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * pi)).epsilon(1e-13));
    CHECK(ct.theta == 0.5);
    CHECK(c_theta(2, 1).theta == 1.5);
    auto a = c_theta(3, 2), b = c_theta(2, 3);
    CHECK(a.log_c == b.log_c);
    CHECK(a.theta == b.theta);
}

TEST_CASE("Selberg constants") {
    for (double beta : {0.5, 1.0, 2.0}) {
        CHECK(psi_selberg(1, beta) ==
              doctest::Approx(std::log(std::sqrt(2.0 * pi / beta)))
                  .epsilon(1e-13));
        CHECK(std::fabs(selberg_I(1, beta)) < 1e-13);
    }
    // Psi_2^{(2)} = pi, evaluated termwise
    CHECK(psi_selberg(2, 2.0) == doctest::Approx(std::log(pi)).epsilon(1e-13));
    CHECK(std::exp(selberg_I(2, 2.0)) ==
          doctest::Approx(0.62665706865775013).epsilon(1e-12));
    CHECK(std::exp(selberg_I(3, 1.0)) ==
          doctest::Approx(1.0233267079464885).epsilon(1e-12));
    CHECK(std::exp(selberg_I(3, 2.0)) ==
          doctest::Approx(0.45344984105855446).epsilon(1e-12));
    CHECK_THROWS_AS(psi_selberg(0, 1.0), DomainError);
    CHECK_THROWS_AS(selberg_I(2, 0.0), DomainError);
}

TEST_CASE("scaled_I_k") {
    // k = 1: 0-dimensional integral and zero scaling power
    for (unsigned l = 1; l <= 3; ++l)
        for (double z : {0.5, 1.0, 2.0})
            CHECK(std::fabs(scaled_I_k(1, l, z)) < 1e-13);
    // I_2^{(1)} with l = 1: (1/3)^1 * I(2,1) = 1/3
    CHECK(std::exp(scaled_I_k(2, 1, 0.5)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("full_I closed form and product form") {
    for (double z : {0.5, 1.0, 2.0}) {
        CHECK(full_I(1, 1, z) ==
              doctest::Approx(std::log(0.5 * std::sqrt(pi / z)))
                  .epsilon(1e-13));
    }
    CHECK(std::exp(full_I(1, 1, 1.0)) ==
          doctest::Approx(std::sqrt(pi) / 2.0).epsilon(1e-13));
    CHECK(std::exp(full_I(2, 1, 0.5)) ==
          doctest::Approx(0.39387863353455912).epsilon(1e-12));

    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned l = 1; l <= 4; ++l)
            for (double z : {0.5, 1.0, 2.0})
                CHECK(std::fabs(detail::full_I_product(k, l, z) -
                                detail::full_I_closed(k, l, z)) <= 1e-12);
}

TEST_CASE("a = c^{2z} I assembly and g = 2z theta - (k+l-1)/2") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned l = 1; l <= 3; ++l)
            for (double z : {0.5, 1.0, 1.5}) {
                auto ct = c_theta(k, l);
                CHECK(std::fabs(log_a_hook(k, l, z) -
                                (2.0 * z * ct.log_c + full_I(k, l, z))) <=
                      1e-12);
                CHECK(std::fabs(g_hook(k, l, z) -
                                (2.0 * z * ct.theta - (k + l - 1) / 2.0)) <=
                      1e-12);
            }
}

TEST_CASE("hook_asymptotic evaluation against hand-computed laws") {
    auto f11 = hook_asymptotic(1, 1, 0.5);
    CHECK(f11.evaluate(10) == doctest::Approx(512.0).epsilon(1e-12));

    auto f21 = hook_asymptotic(2, 1, 0.5);
    double expect21 =
        0.25 * std::sqrt(3.0 / pi) * std::pow(3.0, 10.0) / std::sqrt(10.0);
    CHECK(f21.evaluate(10) == doctest::Approx(expect21).epsilon(1e-12));

    auto f112 = hook_asymptotic(1, 1, 1.0);
    double expect112 =
        1.0 / (4.0 * std::sqrt(pi)) * std::pow(4.0, 5.0) / std::sqrt(5.0);
    CHECK(f112.evaluate(5) == doctest::Approx(expect112).epsilon(1e-12));
}

TEST_CASE("scaled coordinates") {
    // k = l = 1, nu = (m + t), mu = (m - t): alpha = -beta = t/sqrt(n_bar)
    Partition lam({8, 1, 1, 1, 1});  // hook with arm 7, leg 4, n = 12
    auto d = decompose(lam, HookShape(1, 1));
    CHECK(d.n_bar == 11);
    auto sc = coords_from_decomposition(d);
    REQUIRE(sc.alpha.size() == 1);
    REQUIRE(sc.beta.size() == 1);
    CHECK(sc.alpha[0] ==
          doctest::Approx((7.0 - 5.5) / std::sqrt(11.0)).epsilon(1e-15));
    CHECK(sc.alpha[0] + sc.beta[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sc.alpha_sum == doctest::Approx(sc.alpha[0]).epsilon(1e-15));

    // the affine map inverts exactly (up to float round-off)
    double back = sc.alpha[0] * std::sqrt(11.0) + 11.0 / 2.0;
    CHECK(back == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("scaled coordinates sum to zero across blocks") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned l = 1; l <= 3; ++l)
            for (std::uint64_t n = k * l + k + l; n <= 24; ++n) {
                for (const auto& lam : hook_partitions(HookShape(k, l), n)) {
                    if (lam.part(k) < l || lam.n() == k * l) continue;
                    auto sc =
                        coords_from_decomposition(decompose(lam, {k, l}));
                    double s = 0;
                    for (double v : sc.alpha) s += v;
                    for (double v : sc.beta) s += v;
                    CHECK(std::fabs(s) <= 1e-12);
                }
            }
}

TEST_CASE("exponent identity under the strip-coordinate limit maps") {
    // (k/2) sum a_i^2 = (k+l)/2 sum alpha_i^2 - (k+l)/(2k) alpha^2,
    // checked on every decomposable shape of a fixed n
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned l = 1; l <= 3; ++l) {
            std::uint64_t n = 18;
            for (const auto& lam : hook_partitions(HookShape(k, l), n)) {
                if (lam.part(k) < l) continue;
                auto d = decompose(lam, HookShape(k, l));
                if (d.n_bar == 0) continue;
                auto sc = coords_from_decomposition(d);
                double lhs = 0;
                for (double a : sc.a) lhs += a * a;
                lhs *= 0.5 * k;
                double sum_alpha_sq = 0;
                for (double v : sc.alpha) sum_alpha_sq += v * v;
                double rhs = 0.5 * (k + l) * sum_alpha_sq -
                             (k + l) / (2.0 * k) * sc.alpha_sum *
                                 sc.alpha_sum;
                CHECK(std::fabs(lhs - rhs) <= 1e-10);
            }
        }
}

TEST_CASE("single-shape hook estimate") {
    // k = l = 1: empty Vandermonde, never degenerate
    Partition lam({6, 1, 1, 1, 1, 1});
    auto d = decompose(lam, HookShape(1, 1));
    auto sc = coords_from_decomposition(d);
    double est = single_f_hook_estimate(d, sc, lam.n());
    CHECK(std::isfinite(est));

    // coinciding rows degenerate the estimate
    Partition sq({4, 4});
    auto d2 = decompose(sq, HookShape(2, 1));
    auto sc2 = coords_from_decomposition(d2);
    CHECK_THROWS_AS(single_f_hook_estimate(d2, sc2, sq.n()),
                    DegenerateShape);
}

TEST_CASE("single-shape strip estimate") {
    // k = 1: the estimate is identically 1 = f^{(n)}
    std::vector<double> a0 = {0.0};
    CHECK(single_f_strip_estimate(1, a0, 25) == 0.0);

    // gamma_2 = 2^2 / sqrt(2 pi)
    CHECK(std::exp(detail::strip_gamma_log(2)) ==
          doctest::Approx(4.0 / std::sqrt(2.0 * pi)).epsilon(1e-13));

    std::vector<double> tie = {0.3, 0.3};
    CHECK_THROWS_AS(single_f_strip_estimate(2, tie, 30), DegenerateShape);
}
