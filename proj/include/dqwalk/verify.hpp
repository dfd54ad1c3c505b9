#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dqwalk/analysis.hpp"
#include "dqwalk/coin.hpp"
#include "dqwalk/engine.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/reduce.hpp"

namespace dqwalk {

enum class VerifyDepth { quick, full };

// One invariant check: passes when measured <= threshold.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string detail;
};

inline CheckResult make_result(std::string name, double measured, double threshold,
                               std::string detail = {})
{
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.threshold = threshold;
    r.passed = measured <= threshold;
    r.detail = std::move(detail);
    return r;
}

// Max deviation of C^dagger C from the identity.
inline double unitarity_deviation(const CoinMatrix& coin)
{
    const std::size_t n = coin.dim;
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            cx_double acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                acc += std::conj(coin(j, a)) * coin(j, b);
            const double expected = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - expected));
        }
    }
    return worst;
}

// The coin factory parameter lets tests feed a deliberately corrupted coin
// through the same check the verification suite runs.
inline CheckResult check_coin_unitarity(
    std::size_t max_n, double threshold,
    const std::function<CoinMatrix(std::size_t)>& make_coin = [](std::size_t n) {
        return fourier_coin(n);
    })
{
    double worst = 0.0;
    for (std::size_t n = 1; n <= max_n; ++n)
        worst = std::max(worst, unitarity_deviation(make_coin(n)));
    return make_result("coin unitarity (n <= " + std::to_string(max_n) + ")", worst,
                       threshold);
}

// One step on |x, forward> and on |x, loop-superposition> against the
// coefficients 1/sqrt(n), sqrt((n-1)/n), -1/sqrt(n).
inline CheckResult check_one_step_algebra(const std::vector<std::size_t>& ns,
                                          double threshold)
{
    double worst = 0.0;
    for (std::size_t n : ns) {
        const CoinMatrix coin = fourier_coin(n);
        const EdgePairing pairing = natural_pairing(n, 4);
        const double beta = 1.0 / std::sqrt(static_cast<double>(n));
        const double alpha = std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n));
        const double loop_amp = 1.0 / std::sqrt(static_cast<double>(n - 1));
        const std::size_t x = 2;

        FullState fwd(n, 4);
        fwd.frontier = x;
        fwd.at(x, forward_slot) = cx_double(1.0, 0.0);
        step(fwd, coin, pairing);
        worst = std::max(worst, std::abs(fwd.at(x + 1, forward_slot) - cx_double(beta, 0.0)));
        for (std::size_t k = 1; k < n; ++k)
            worst = std::max(worst, std::abs(fwd.at(x, loop_slot(k)) -
                                             cx_double(alpha * loop_amp, 0.0)));

        FullState loops(n, 4);
        loops.frontier = x;
        for (std::size_t k = 1; k < n; ++k)
            loops.at(x, loop_slot(k)) = cx_double(loop_amp, 0.0);
        step(loops, coin, pairing);
        worst = std::max(worst, std::abs(loops.at(x + 1, forward_slot) - cx_double(alpha, 0.0)));
        for (std::size_t k = 1; k < n; ++k)
            worst = std::max(worst, std::abs(loops.at(x, loop_slot(k)) -
                                             cx_double(-beta * loop_amp, 0.0)));
    }
    return make_result("one-step algebra", worst, threshold);
}

// Shared trajectory per n: norm drift and, for the natural pairing with
// plain loops, the residual outside the {forward, loop-super} subspace.
inline std::pair<CheckResult, CheckResult> check_norm_and_closure(
    const std::vector<std::size_t>& ns, std::size_t t, double norm_threshold,
    double closure_threshold)
{
    double worst_drift = 0.0;
    double worst_residual = 0.0;
    for (std::size_t n : ns) {
        WalkConfig config;
        config.n = n;
        config.steps = t;
        FullState state = initial_state(config);
        const CoinMatrix coin = fourier_coin(n);
        const EdgePairing pairing = natural_pairing(n, t);
        for (std::size_t s = 0; s < t; ++s) {
            step(state, coin, pairing);
            worst_drift = std::max(worst_drift, std::abs(state.norm() - 1.0));
            if (n >= 2)
                worst_residual = std::max(worst_residual, project_to_reduced(state).second);
        }
    }
    return {make_result("norm conservation (natural)", worst_drift, norm_threshold),
            make_result("subspace closure residual", worst_residual, closure_threshold)};
}

inline CheckResult check_norm_random(const std::vector<std::size_t>& ns, std::size_t t,
                                     std::uint64_t seed, double threshold)
{
    double worst = 0.0;
    for (std::size_t n : ns) {
        WalkConfig config;
        config.n = n;
        config.steps = t;
        config.pairing = PairingMode::random;
        config.seed = seed;
        const FullState state = evolve(config);
        worst = std::max(worst, std::abs(state.norm() - 1.0));
    }
    return make_result("norm conservation (random)", worst, threshold);
}

inline CheckResult check_equivalence(const std::vector<std::size_t>& ns, std::size_t t,
                                     double threshold)
{
    double worst = 0.0;
    for (std::size_t n : ns)
        worst = std::max(worst, equivalence_check(n, t, threshold).max_amplitude_diff);
    return make_result("full/reduced equivalence (t = " + std::to_string(t) + ")",
                       worst, threshold);
}

inline CheckResult check_classical_moments(const std::vector<std::size_t>& ns,
                                           const std::vector<std::size_t>& ts,
                                           double threshold)
{
    double worst = 0.0;
    for (std::size_t n : ns) {
        const double p = 1.0 / static_cast<double>(n);
        for (std::size_t t : ts) {
            const Moments m = moments(classical_distribution(n, t));
            const double td = static_cast<double>(t);
            worst = std::max(worst, std::abs(m.mean - td * p));
            worst = std::max(worst, std::abs(m.variance - td * p * (1.0 - p)));
        }
    }
    return make_result("classical moments", worst, threshold);
}

// Every generated line-with-loops graph must be balanced everywhere except
// the two endpoint line vertices, and a hand-built unbalanced graph must
// be rejected. Measured value is the number of graphs that deviate.
inline CheckResult check_realizability(const std::vector<std::size_t>& ns,
                                       const std::vector<std::size_t>& loop_lengths,
                                       std::size_t x_max)
{
    double mismatches = 0.0;
    for (std::size_t n : ns) {
        for (std::size_t L : loop_lengths) {
            const DirectedGraph g = build_line_with_loops({n, x_max, L});
            const RealizabilityReport report = check_unitary_realizable(g);
            const bool endpoints_only =
                report.violations.size() == 2 && report.violations[0].vertex == 0 &&
                report.violations[1].vertex == x_max;
            if (!endpoints_only || report.realizable)
                mismatches += 1.0;
        }
    }
    DirectedGraph unbalanced;
    unbalanced.vertex_count = 2;
    unbalanced.edges = {{0, 1}};
    if (check_unitary_realizable(unbalanced).realizable)
        mismatches += 1.0;
    return make_result("realizability condition", mismatches, 0.0);
}

inline CheckResult check_reduced_norm(std::size_t n, std::size_t t, double threshold)
{
    const ReducedState state = evolve_reduced(n, t);
    return make_result("reduced-walk norm (t = " + std::to_string(t) + ")",
                       std::abs(state.norm() - 1.0), threshold);
}

// n = 1: no loops, so the walker must reach position t with probability 1.
inline CheckResult check_unit_coin_transport(std::size_t t)
{
    WalkConfig config;
    config.n = 1;
    config.steps = t;
    const PositionDistribution dist = position_distribution(evolve(config));
    return make_result("unit coin transport", std::abs(dist.probabilities[t] - 1.0),
                       1e-12);
}

inline CheckResult check_distribution_normalization(std::size_t n, std::size_t t,
                                                    double threshold)
{
    WalkConfig config;
    config.n = n;
    config.steps = t;
    const PositionDistribution dist = position_distribution(evolve(config));
    double sum = 0.0;
    for (double p : dist.probabilities)
        sum += p;
    return make_result("distribution normalization", std::abs(sum - 1.0), threshold);
}

inline CheckResult check_loop_discretization_norm(std::size_t n, std::size_t L,
                                                  std::size_t t, double threshold)
{
    WalkConfig config;
    config.n = n;
    config.steps = t;
    config.loop_length = L;
    const FullState state = evolve(config);
    double sum = 0.0;
    for (double p : position_distribution(state).probabilities)
        sum += p;
    const double worst =
        std::max(std::abs(state.norm() - 1.0), std::abs(sum - 1.0));
    return make_result("discretized-loop norm (L = " + std::to_string(L) + ")", worst,
                       threshold);
}

// Chi-square over the 6 permutations of 3 slots, sampled across vertices
// of one seeded pairing. 20.515 is the 0.999 quantile at 5 dof.
inline CheckResult check_pairing_uniformity()
{
    constexpr std::size_t n = 3;
    constexpr std::size_t vertices = 6000;
    const EdgePairing pairing = make_random_pairing(n, vertices - 1, 20240216);

    const std::array<std::array<std::uint32_t, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::array<std::size_t, 6> counts{};
    for (std::size_t v = 0; v < vertices; ++v) {
        const std::uint32_t* perm = pairing.table.data() + v * n;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            if (perm[0] == perms[i][0] && perm[1] == perms[i][1] && perm[2] == perms[i][2]) {
                ++counts[i];
                break;
            }
        }
    }
    const double expected = static_cast<double>(vertices) / 6.0;
    double chi_sq = 0.0;
    for (std::size_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi_sq += d * d / expected;
    }
    return make_result("pairing uniformity (chi-square)", chi_sq, 20.515);
}

// Quantum tails must shrink between t = 100 and t = 400.
inline CheckResult check_tail_decay(const std::vector<std::size_t>& ns)
{
    double worst = -1.0;  // most positive (tail_400 - tail_100); negative passes
    for (std::size_t n : ns) {
        WalkConfig early{n, 100, PairingMode::natural, 0, 1, false};
        WalkConfig late{n, 400, PairingMode::natural, 0, 1, false};
        const double tail_early =
            tail_mass(position_distribution(evolve(early)), interval_bounds(n, 100));
        const double tail_late =
            tail_mass(position_distribution(evolve(late)), interval_bounds(n, 400));
        worst = std::max(worst, tail_late - tail_early);
    }
    return make_result("tail decay direction", worst, 0.0);
}

inline std::vector<CheckResult> run_verification(VerifyDepth depth)
{
    std::vector<CheckResult> results;
    const bool full = depth == VerifyDepth::full;

    results.push_back(check_coin_unitarity(full ? 256 : 64, 1e-12));
    results.push_back(check_one_step_algebra({2, 3, 4, 8, 16, 64}, 1e-13));

    const std::vector<std::size_t> walk_ns =
        full ? std::vector<std::size_t>{2, 4, 8, 16, 32, 64}
             : std::vector<std::size_t>{2, 8};
    const std::size_t walk_t = full ? 1000 : 300;
    auto [norm_check, closure_check] =
        check_norm_and_closure(walk_ns, walk_t, 1e-9, 1e-11);
    results.push_back(norm_check);
    results.push_back(closure_check);

    results.push_back(check_norm_random(
        full ? std::vector<std::size_t>{2, 8, 64} : std::vector<std::size_t>{8},
        walk_t, 12345, 1e-9));

    results.push_back(check_equivalence(
        full ? std::vector<std::size_t>{2, 4, 16, 64} : std::vector<std::size_t>{2, 8},
        200, 1e-9));

    results.push_back(check_classical_moments(
        {1, 2, 4, 8, 16, 32, 64},
        full ? std::vector<std::size_t>{10, 100, 1000}
             : std::vector<std::size_t>{10, 100},
        1e-9));

    results.push_back(check_realizability(
        full ? std::vector<std::size_t>{1, 2, 4, 8} : std::vector<std::size_t>{1, 2, 4},
        full ? std::vector<std::size_t>{1, 2, 3, 5} : std::vector<std::size_t>{1, 2, 3},
        10));

    results.push_back(check_unit_coin_transport(100));
    results.push_back(check_distribution_normalization(8, 500, 1e-10));
    results.push_back(check_loop_discretization_norm(4, 3, full ? 300 : 100, 1e-10));

    if (full) {
        results.push_back(check_reduced_norm(8, 10000, 1e-10));
        results.push_back(check_pairing_uniformity());
        results.push_back(check_tail_decay({2, 4, 8}));
    }
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results)
{
    for (const CheckResult& r : results)
        if (!r.passed)
            return false;
    return true;
}

}  // namespace dqwalk
