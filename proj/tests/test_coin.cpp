#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dqwalk/coin.hpp"
#include "dqwalk/state.hpp"

using namespace dqwalk;

namespace {

double max_entry_diff(const CoinMatrix& coin, const std::vector<cx_double>& expected)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        worst = std::max(worst, std::abs(coin.entries[i] - expected[i]));
    return worst;
}

double unitarity_deviation(const CoinMatrix& coin)
{
    const std::size_t n = coin.dim;
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            cx_double acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                acc += std::conj(coin(j, a)) * coin(j, b);
            worst = std::max(worst, std::abs(acc - (a == b ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace

TEST_CASE("fourier coin small cases", "[coin]")
{
    const CoinMatrix one = fourier_coin(1);
    REQUIRE(one.dim == 1);
    REQUIRE(std::abs(one(0, 0) - cx_double(1.0, 0.0)) < 1e-15);

    const double s = 1.0 / std::sqrt(2.0);
    REQUIRE(max_entry_diff(fourier_coin(2), {{s, 0}, {s, 0}, {s, 0}, {-s, 0}}) < 1e-15);

    REQUIRE_THROWS_AS(fourier_coin(0), std::invalid_argument);
}

TEST_CASE("fourier coin n = 4 entries follow omega^(j k)", "[coin]")
{
    // omega = i; rows are [1,1,1,1], [1,i,-1,-i], [1,-1,1,-1], [1,-i,-1,i]
    // over 2.
    const CoinMatrix coin = fourier_coin(4);
    const cx_double i(0.0, 1.0);
    REQUIRE(std::abs(coin(1, 1) - i * 0.5) < 1e-15);
    REQUIRE(std::abs(coin(2, 1) - cx_double(-0.5, 0.0)) < 1e-15);
    REQUIRE(std::abs(coin(2, 2) - cx_double(0.5, 0.0)) < 1e-15);  // omega^4 = 1
    REQUIRE(std::abs(coin(2, 3) - cx_double(-0.5, 0.0)) < 1e-15);
    REQUIRE(std::abs(coin(3, 3) - i * 0.5) < 1e-15);  // omega^9 = i
    for (std::size_t k = 0; k < 4; ++k) {
        REQUIRE(std::abs(coin(0, k) - cx_double(0.5, 0.0)) < 1e-15);
        REQUIRE(std::abs(coin(k, 0) - cx_double(0.5, 0.0)) < 1e-15);
    }
}

TEST_CASE("fourier coin is unitary up to n = 256", "[coin]")
{
    double worst = 0.0;
    for (std::size_t n = 1; n <= 256; ++n)
        worst = std::max(worst, unitarity_deviation(fourier_coin(n)));
    REQUIRE(worst < 1e-12);
}

TEST_CASE("reduced coin values", "[coin]")
{
    const ReducedCoin two = reduced_coin(2);
    REQUIRE(two.alpha == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
    REQUIRE(two.beta == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-12));

    const ReducedCoin four = reduced_coin(4);
    REQUIRE(four.beta == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(four.alpha == Catch::Approx(std::sqrt(3.0) / 2.0).margin(1e-15));

    REQUIRE(reduced_coin(1u << 20).beta == Catch::Approx(1.0 / 1024.0).margin(1e-15));

    REQUIRE_THROWS_AS(reduced_coin(1), std::invalid_argument);

    for (std::size_t n : {2u, 3u, 7u, 64u, 4096u}) {
        const ReducedCoin c = reduced_coin(n);
        REQUIRE(std::abs(c.alpha * c.alpha + c.beta * c.beta - 1.0) < 1e-12);
        // [[beta, alpha], [alpha, -beta]] is self-inverse.
        REQUIRE(std::abs(c.beta * c.beta + c.alpha * c.alpha - 1.0) < 1e-14);
        REQUIRE(std::abs(c.beta * c.alpha - c.alpha * c.beta) < 1e-14);
    }
}

TEST_CASE("coin on the forward edge spreads uniformly", "[coin]")
{
    for (std::size_t n : {1u, 2u, 4u, 8u}) {
        FullState state(n, 3);
        state.frontier = 2;
        state.at(2, forward_slot) = cx_double(1.0, 0.0);
        apply_coin(state, fourier_coin(n));
        const double expected = 1.0 / std::sqrt(static_cast<double>(n));
        for (std::size_t j = 0; j < n; ++j)
            REQUIRE(std::abs(state.at(2, j) - cx_double(expected, 0.0)) < 1e-14);
        // Other positions untouched.
        REQUIRE(state.at(0, forward_slot) == cx_double(0.0, 0.0));
    }
}

TEST_CASE("coin splits the loop superposition into forward and loop parts", "[coin]")
{
    // Uses sum_{k=1}^{n-1} omega^{jk} = -1 for j != 0: the uniform loop
    // vector goes to alpha on forward and -beta spread over the loops.
    for (std::size_t n : {2u, 3u, 8u, 64u, 256u}) {
        FullState state(n, 1);
        const double loop_amp = 1.0 / std::sqrt(static_cast<double>(n - 1));
        for (std::size_t k = 1; k < n; ++k)
            state.at(0, loop_slot(k)) = cx_double(loop_amp, 0.0);
        apply_coin(state, fourier_coin(n));

        const double alpha = std::sqrt((n - 1.0) / n);
        const double beta = 1.0 / std::sqrt(static_cast<double>(n));
        REQUIRE(std::abs(state.at(0, forward_slot) - cx_double(alpha, 0.0)) < 1e-13);
        for (std::size_t k = 1; k < n; ++k)
            REQUIRE(std::abs(state.at(0, loop_slot(k)) -
                             cx_double(-beta * loop_amp, 0.0)) < 1e-13);
    }
}

TEST_CASE("coin application preserves the norm", "[coin]")
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (std::size_t n : {2u, 5u, 16u, 64u}) {
        FullState state(n, 4);
        state.frontier = 4;
        for (cx_double& a : state.amplitudes)
            a = cx_double(gauss(rng), gauss(rng));
        const double scale = 1.0 / state.norm();
        for (cx_double& a : state.amplitudes)
            a *= scale;

        apply_coin(state, fourier_coin(n));
        REQUIRE(std::abs(state.norm() - 1.0) < 1e-14);
    }
}

TEST_CASE("coin dimension mismatch is rejected", "[coin]")
{
    FullState state(4, 2);
    REQUIRE_THROWS_AS(apply_coin(state, fourier_coin(3)), std::invalid_argument);
}
