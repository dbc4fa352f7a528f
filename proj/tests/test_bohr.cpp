#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "wd/bohr.hpp"
#include "wd/dirichlet.hpp"
#include "wd/errors.hpp"
#include "test_util.hpp"

using wd::Complex;
using wd::DirichletSeries;
using wd::ExponentVector;
using wd::PowerSeries;

TEST_CASE("factorize produces canonical exponent vectors") {
    CHECK(wd::factorize(1).exps().empty());
    CHECK(wd::factorize(2).exps() == std::vector<std::uint32_t>{1});
    CHECK(wd::factorize(12).exps() == std::vector<std::uint32_t>{2, 1});
    CHECK(wd::factorize(9699690).exps() ==
          std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 1, 1});

    SUBCASE("integer_image inverts factorize") {
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            const auto img = wd::factorize(n).integer_image();
            REQUIRE(img.has_value());
            CHECK(*img == n);
        }
    }
    SUBCASE("trailing zeros never appear") {
        // 2 * 5 uses position 3 but position 2 stays zero and is kept;
        // only positions past the last nonzero one are trimmed.
        CHECK(wd::factorize(10).exps() == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(wd::factorize(10).positions() == 3);
        // The constructor normalizes; (1,0,0) and (1) are the same integer.
        CHECK(ExponentVector({1, 0, 0}) == wd::factorize(2));
        CHECK(ExponentVector({1, 0, 0}).positions() == 1);
    }
}

TEST_CASE("prime table and nth_prime") {
    const auto table = wd::PrimeTable::first(8);
    CHECK(table.primes() ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(table.size() == 8);
    CHECK(wd::nth_prime(1) == 2);
    CHECK(wd::nth_prime(25) == 97);
}

TEST_CASE("exponent vectors order by integer image") {
    PowerSeries F(4);
    F.set(wd::factorize(6), {1.0, 0.0});
    F.set(wd::factorize(4), {1.0, 0.0});
    F.set(wd::factorize(5), {1.0, 0.0});
    std::vector<std::uint64_t> images;
    for (const auto& [alpha, c] : F.terms()) {
        images.push_back(*alpha.integer_image());
    }
    CHECK(images == std::vector<std::uint64_t>{4, 5, 6});
}

TEST_CASE("power series key validation") {
    PowerSeries F(2);
    F.set(wd::factorize(6), {1.0, 0.0});  // positions {1,2}, fine
    CHECK_THROWS_AS(F.set(wd::factorize(5), {1.0, 0.0}), wd::ValidationError);

    SUBCASE("overflowing image is detected by inverse_lift") {
        PowerSeries big(1);
        big.set(ExponentVector({64}), {1.0, 0.0});  // 2^64
        CHECK(!ExponentVector({64}).integer_image().has_value());
        CHECK_THROWS_AS(wd::inverse_lift(big), wd::IndexOverflow);
    }
}

TEST_CASE("lift reindexes and inverse_lift undoes it") {
    DirichletSeries f(20);
    f.set(1, {2.0, 0.0});
    f.set(6, {0.0, 1.0});
    f.set(12, {-0.5, 0.25});

    const auto F = wd::lift(f);
    CHECK(F.prime_budget() == 2);  // 12 = 2^2 * 3
    CHECK(F.coefficient(ExponentVector{}) == Complex{2.0, 0.0});
    CHECK(F.coefficient(ExponentVector({1, 1})) == Complex{0.0, 1.0});
    CHECK(F.coefficient(ExponentVector({2, 1})) == Complex{-0.5, 0.25});
    CHECK(F.support_size() == 3);

    const auto back = wd::inverse_lift(F);
    CHECK(back.cutoff() == 12);
    CHECK(back.support_size() == 3);
    for (const auto& [n, c] : f.terms()) CHECK(back.coefficient(n) == c);

    SUBCASE("round-trip on random series is exact") {
        std::mt19937 rng(21);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = wdtest::random_series(rng, 100000, 60);
            const auto back2 = wd::inverse_lift(wd::lift(g));
            REQUIRE(back2.support_size() == g.support_size());
            for (const auto& [n, c] : g.terms()) {
                CHECK(back2.coefficient(n) == c);
            }
        }
    }
}

TEST_CASE("lift preserves the norm bitwise") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = wdtest::random_series(rng, 1u << 20, 100);
        CHECK(wd::one_norm(wd::lift(f)) == wd::a_plus_norm_partial(f));
    }
}

TEST_CASE("lift turns convolution into power-series multiplication") {
    // Brute-force product over key pairs of the lifted factors, keeping
    // only terms whose integer preimage stays under the cutoff; this must
    // match the lift of the truncated Dirichlet product.
    std::mt19937 rng(23);
    const std::uint64_t cutoff = 4000;
    for (int trial = 0; trial < 15; ++trial) {
        const auto f = wdtest::random_series(rng, 60, 12);
        const auto g = wdtest::random_series(rng, 60, 12);
        const auto F = wd::lift(f);
        const auto G = wd::lift(g);

        std::map<std::uint64_t, Complex> brute;
        for (const auto& [a, ca] : F.terms()) {
            for (const auto& [b, cb] : G.terms()) {
                const std::uint64_t na = *a.integer_image();
                const std::uint64_t nb = *b.integer_image();
                if (na > cutoff / nb) continue;
                brute[na * nb] += ca * cb;
            }
        }

        const auto H = wd::lift(wd::mul(f, g, cutoff));
        for (const auto& [alpha, c] : H.terms()) {
            const auto n = *alpha.integer_image();
            CHECK(std::abs(brute[n] - c) <= 1e-12);
            brute.erase(n);
        }
        // Whatever remains must be pure cancellation noise.
        for (const auto& [n, c] : brute) CHECK(std::abs(c) <= 1e-12);
    }
}

TEST_CASE("evaluation at a half-plane point") {
    const auto table = wd::PrimeTable::first(10);

    SUBCASE("1 + 36^{-s} at s = 1/2 is 1 + 1/6") {
        DirichletSeries f(36);
        f.set(1, {1.0, 0.0});
        f.set(36, {1.0, 0.0});
        const auto F = wd::lift(f);
        const auto v = wd::eval_at_half_plane_point(F, {0.5, 0.0}, table);
        CHECK(std::abs(v - Complex{1.0 + 1.0 / 6.0, 0.0}) < 1e-14);
    }
    SUBCASE("matches direct evaluation on random series") {
        std::mt19937 rng(24);
        std::uniform_real_distribution<double> sig(0.2, 2.0);
        std::uniform_real_distribution<double> tau(-20.0, 20.0);
        for (int trial = 0; trial < 25; ++trial) {
            const auto f = wdtest::random_series(rng, 500, 40);
            const auto F = wd::lift(f);
            const auto wide = wd::PrimeTable::first(F.prime_budget());
            const Complex s{sig(rng), tau(rng)};
            const auto lhs = wd::eval_at_half_plane_point(F, s, wide);
            const auto rhs = wd::evaluate(f, s);
            CHECK(std::abs(lhs - rhs) <=
                  1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
    SUBCASE("requires Re s > 0 and a large enough table") {
        DirichletSeries f(2);
        f.set(2, {1.0, 0.0});
        const auto F = wd::lift(f);
        CHECK_THROWS_AS(
            wd::eval_at_half_plane_point(F, {0.0, 0.0}, table),
            wd::ValidationError);
        const auto empty_table = wd::PrimeTable::first(0);
        CHECK_THROWS_AS(
            wd::eval_at_half_plane_point(F, {1.0, 0.0}, empty_table),
            wd::ValidationError);
    }
}
