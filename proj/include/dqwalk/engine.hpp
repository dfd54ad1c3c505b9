#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "dqwalk/coin.hpp"
#include "dqwalk/state.hpp"

namespace dqwalk {

enum class PairingMode { natural, random };

// Thrown by shift when forward amplitude would leave the allocated
// position range; the caller sized t_cap too small.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per line vertex, a bijection from the n incoming slots {line-in,
// loop 1..n-1} onto the n outgoing slots {line-out, loop 1..n-1}. An
// empty table is the identity pairing (line-in -> line-out, loop k ->
// loop k), which is what the natural mode uses; the random mode fills
// the table with independent uniform permutations.
struct EdgePairing {
    PairingMode mode = PairingMode::natural;
    std::size_t coin_dim = 1;
    std::size_t x_max = 0;
    std::vector<std::uint32_t> table;  // (x_max+1) * coin_dim, empty = identity

    std::size_t out_slot(std::size_t vertex, std::size_t in_slot) const
    {
        if (table.empty())
            return in_slot;
        if (vertex > x_max)
            throw std::out_of_range("EdgePairing: vertex beyond pairing table");
        return table[vertex * coin_dim + in_slot];
    }
};

struct WalkConfig {
    std::size_t n = 2;
    std::size_t steps = 100;
    PairingMode pairing = PairingMode::natural;
    std::uint64_t seed = 0;          // used only by random pairing
    std::size_t loop_length = 1;
    bool resample_pairing = false;   // draw a fresh pairing before every step
};

// Probability of measuring each position, marginalized over edge labels.
struct PositionDistribution {
    std::vector<double> probabilities;
};

inline EdgePairing natural_pairing(std::size_t n, std::size_t x_max)
{
    return EdgePairing{PairingMode::natural, n, x_max, {}};
}

namespace detail {

// Uniform draw in [0, bound) by rejection, so pairings do not depend on
// the standard library's distribution internals.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = rng();
    while (v >= limit)
        v = rng();
    return v % bound;
}

}  // namespace detail

// Draws one uniform permutation per line vertex from an already-seeded
// generator (Fisher-Yates, vertices in ascending order).
inline EdgePairing random_pairing_from(std::mt19937_64& rng, std::size_t n,
                                       std::size_t x_max)
{
    if (n < 1)
        throw std::invalid_argument("random_pairing_from: n must be >= 1");
    EdgePairing pairing{PairingMode::random, n, x_max, {}};
    pairing.table.resize((x_max + 1) * n);
    for (std::size_t v = 0; v <= x_max; ++v) {
        std::uint32_t* perm = pairing.table.data() + v * n;
        for (std::size_t s = 0; s < n; ++s)
            perm[s] = static_cast<std::uint32_t>(s);
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = detail::uniform_below(rng, i);
            std::swap(perm[i - 1], perm[j]);
        }
    }
    return pairing;
}

// Deterministic in (n, x_max, seed); the pairing is sampled once and held
// fixed for the lifetime of the walk.
inline EdgePairing make_random_pairing(std::size_t n, std::size_t x_max,
                                       std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return random_pairing_from(rng, n, x_max);
}

// |0, forward> with unit amplitude.
inline FullState initial_state(const WalkConfig& config)
{
    FullState state(config.n, config.steps, config.loop_length);
    state.at(0, forward_slot) = cx_double(1.0, 0.0);
    state.frontier = 0;
    return state;
}

// The shift operator: amplitude arriving at a vertex on incoming slot s
// leaves on outgoing slot pairing(s). Forward amplitude at x arrives at
// x+1 on the line-in slot; loop amplitude re-enters its own vertex (after
// traversing the L-1 interior edges when loops are discretized).
inline void shift(FullState& state, const EdgePairing& pairing)
{
    const std::size_t n = state.coin_dim;
    const std::size_t L = state.loop_length;
    if (!pairing.table.empty() && pairing.coin_dim != n)
        throw std::invalid_argument("shift: pairing dimension does not match state");

    const std::size_t stride = state.stride();
    std::vector<cx_double> next(state.amplitudes.size(), cx_double(0.0, 0.0));

    for (std::size_t x = 0; x <= state.frontier; ++x) {
        const cx_double* cur = state.amplitudes.data() + x * stride;

        const cx_double fwd = cur[forward_slot];
        if (fwd != cx_double(0.0, 0.0)) {
            if (x + 1 > state.t_cap)
                throw CapacityError("shift: forward amplitude at position " +
                                    std::to_string(x) + " exceeds t_cap " +
                                    std::to_string(state.t_cap));
            const std::size_t s = pairing.out_slot(x + 1, forward_slot);
            next[(x + 1) * stride + s] += fwd;
        }

        for (std::size_t k = 1; k < n; ++k) {
            if (L == 1) {
                const std::size_t s = pairing.out_slot(x, loop_slot(k));
                next[x * stride + s] += cur[loop_slot(k)];
                continue;
            }
            // Delay line: the coin-facing slot feeds depth 1, each interior
            // edge advances one depth, and the deepest edge re-enters the
            // vertex on incoming slot k.
            next[x * stride + interior_slot(n, L, k, 1)] += cur[loop_slot(k)];
            for (std::size_t d = 1; d + 1 < L; ++d)
                next[x * stride + interior_slot(n, L, k, d + 1)] +=
                    cur[interior_slot(n, L, k, d)];
            const std::size_t s = pairing.out_slot(x, loop_slot(k));
            next[x * stride + s] += cur[interior_slot(n, L, k, L - 1)];
        }
    }

    state.amplitudes = std::move(next);
    state.frontier = std::min(state.frontier + 1, state.t_cap);
}

// One step of U = S * (I (x) C).
inline void step(FullState& state, const CoinMatrix& coin, const EdgePairing& pairing)
{
    apply_coin(state, coin);
    shift(state, pairing);
}

// t applications of the one-step operator to |0, forward>.
inline FullState evolve(const WalkConfig& config)
{
    FullState state = initial_state(config);
    if (config.steps == 0)
        return state;

    const CoinMatrix coin = fourier_coin(config.n);
    if (config.pairing == PairingMode::natural) {
        const EdgePairing pairing = natural_pairing(config.n, config.steps);
        for (std::size_t s = 0; s < config.steps; ++s)
            step(state, coin, pairing);
        return state;
    }

    std::mt19937_64 rng(config.seed);
    EdgePairing pairing = random_pairing_from(rng, config.n, config.steps);
    for (std::size_t s = 0; s < config.steps; ++s) {
        step(state, coin, pairing);
        if (config.resample_pairing && s + 1 < config.steps)
            pairing = random_pairing_from(rng, config.n, config.steps);
    }
    return state;
}

// P(x) = sum over edge labels of |amplitude(x, label)|^2; interior loop
// amplitude counts toward its base vertex.
inline PositionDistribution position_distribution(const FullState& state)
{
    const std::size_t stride = state.stride();
    PositionDistribution dist;
    dist.probabilities.assign(state.t_cap + 1, 0.0);
    for (std::size_t x = 0; x <= state.t_cap; ++x) {
        double p = 0.0;
        const cx_double* v = state.amplitudes.data() + x * stride;
        for (std::size_t s = 0; s < stride; ++s)
            p += std::norm(v[s]);
        dist.probabilities[x] = p;
    }
    return dist;
}

inline double expected_position(const PositionDistribution& dist)
{
    double mean = 0.0;
    for (std::size_t x = 0; x < dist.probabilities.size(); ++x)
        mean += static_cast<double>(x) * dist.probabilities[x];
    return mean;
}

// Exact binomial law of the classical walk: each step moves forward with
// probability 1/n. Computed by iterative convolution, no sampling.
inline PositionDistribution classical_distribution(std::size_t n, std::size_t t)
{
    if (n < 1)
        throw std::invalid_argument("classical_distribution: n must be >= 1");
    const double p = 1.0 / static_cast<double>(n);
    const double q = 1.0 - p;
    PositionDistribution dist;
    dist.probabilities.assign(t + 1, 0.0);
    dist.probabilities[0] = 1.0;
    for (std::size_t s = 1; s <= t; ++s) {
        for (std::size_t x = s; x-- > 0;)
            dist.probabilities[x + 1] = dist.probabilities[x + 1] * q +
                                        dist.probabilities[x] * p;
        dist.probabilities[0] *= q;
    }
    return dist;
}

}  // namespace dqwalk
