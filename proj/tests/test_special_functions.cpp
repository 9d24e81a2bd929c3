#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hooksum/special_functions.hpp"

using namespace hooksum;
using std::numbers::pi;

TEST_CASE("log_gamma fixed points") {
    CHECK(std::fabs(log_gamma(1.0)) < 1e-14);
    CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
    CHECK(log_gamma(1.5) ==
          doctest::Approx(std::log(std::sqrt(pi) / 2.0)).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("log_gamma recurrence ln Gamma(x+1) - ln Gamma(x) = ln x") {
    for (double x = 0.5; x <= 30.0; x += 0.5) {
        CHECK(std::fabs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <
              1e-12);
    }
}

TEST_CASE("gamma examples") {
    CHECK(hooksum::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(hooksum::gamma(1.5) ==
          doctest::Approx(0.88622692545275801).epsilon(1e-13));
    // recurrence-derived value: (5/2)(3/2)(1/2) sqrt(pi)
    CHECK(hooksum::gamma(3.5) ==
          doctest::Approx(2.5 * 1.5 * 0.5 * std::sqrt(pi)).epsilon(1e-13));
    CHECK_THROWS_AS(hooksum::gamma(500.0), OverflowError);
}

TEST_CASE("gamma(n+1) matches exact factorials") {
    double fact = 1.0;
    for (unsigned n = 1; n <= 20; ++n) {
        fact *= n;
        CHECK(std::fabs(hooksum::gamma(n + 1.0) / fact - 1.0) < 1e-12);
    }
}

TEST_CASE("log_gamma accuracy across (0, 50]") {
    // spot values from the exact recurrence seeded at integers/half-integers
    double lg_half = 0.5 * std::log(pi);  // ln Gamma(1/2)
    double x = 0.5;
    double acc = lg_half;
    while (x + 1.0 <= 50.0) {
        acc += std::log(x);
        x += 1.0;
        CHECK(std::fabs(log_gamma(x) - acc) < 1e-12 * std::max(1.0, acc));
    }
}

TEST_CASE("log_big") {
    CHECK(log_big(BigCount(1)) == 0.0);
    CHECK(std::fabs(log_big(pow2(100)) - 100.0 * std::log(2.0)) < 1e-12);
    CHECK(std::fabs(log_big(factorial(10)) - log_gamma(11.0)) < 1e-12);
    CHECK_THROWS_AS(log_big(BigCount(0)), DomainError);
}

TEST_CASE("log_big is additive on big random products") {
    gmp_randstate_t st;
    gmp_randinit_default(st);
    gmp_randseed_ui(st, 20240817);
    for (int rep = 0; rep < 50; ++rep) {
        BigCount a, b;
        mpz_urandomb(a.get_mpz_t(), st, 1000);
        mpz_urandomb(b.get_mpz_t(), st, 1000);
        a += 1;  // keep positive
        b += 1;
        CHECK(std::fabs(log_big(a * b) - log_big(a) - log_big(b)) < 1e-11);
    }
    gmp_randclear(st);
}
