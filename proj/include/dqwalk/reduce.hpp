#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dqwalk/coin.hpp"
#include "dqwalk/engine.hpp"
#include "dqwalk/state.hpp"

namespace dqwalk {

// Walker state in the two-dimensional invariant subspace spanned by the
// forward edge and the uniform loop superposition.
struct ReducedState {
    std::size_t coin_dim = 2;  // n of the walk this state reduces
    std::size_t t_cap = 0;
    std::vector<cx_double> amplitudes;  // (t_cap+1) * 2: [forward, loop-super]

    cx_double& at(std::size_t pos, std::size_t comp)
    {
        return amplitudes[pos * 2 + comp];
    }
    const cx_double& at(std::size_t pos, std::size_t comp) const
    {
        return amplitudes[pos * 2 + comp];
    }

    double norm_squared() const
    {
        double s = 0.0;
        for (const cx_double& a : amplitudes)
            s += std::norm(a);
        return s;
    }
    double norm() const { return std::sqrt(norm_squared()); }
};

inline constexpr std::size_t reduced_forward = 0;
inline constexpr std::size_t reduced_loop_super = 1;

// t steps of the reduced walk from |0, forward>: coin
// [[beta, alpha], [alpha, -beta]] on the two components at each position,
// then the forward component moves up one position.
inline ReducedState evolve_reduced(std::size_t n, std::size_t t)
{
    const ReducedCoin coin = reduced_coin(n);  // rejects n < 2
    ReducedState state;
    state.coin_dim = n;
    state.t_cap = t;
    state.amplitudes.assign((t + 1) * 2, cx_double(0.0, 0.0));
    state.at(0, reduced_forward) = cx_double(1.0, 0.0);

    for (std::size_t s = 0; s < t; ++s) {
        const std::size_t frontier = s;
        for (std::size_t x = 0; x <= frontier; ++x) {
            const cx_double f = state.at(x, reduced_forward);
            const cx_double l = state.at(x, reduced_loop_super);
            state.at(x, reduced_forward) = coin.beta * f + coin.alpha * l;
            state.at(x, reduced_loop_super) = coin.alpha * f - coin.beta * l;
        }
        // Shift: forward up, loop superposition stays. Descending so each
        // forward amplitude is read before it is overwritten.
        for (std::size_t x = frontier + 1; x-- > 0;) {
            state.at(x + 1, reduced_forward) = state.at(x, reduced_forward);
            if (x == 0)
                state.at(0, reduced_forward) = cx_double(0.0, 0.0);
        }
    }
    return state;
}

// Projects a full state onto the {forward, loop-superposition} subspace.
// Returns the projected state together with the norm of the component
// orthogonal to the symmetric loop subspace.
inline std::pair<ReducedState, double> project_to_reduced(const FullState& full)
{
    if (full.loop_length != 1)
        throw std::invalid_argument("project_to_reduced: requires loop_length 1");
    const std::size_t n = full.coin_dim;
    if (n < 2)
        throw std::invalid_argument("project_to_reduced: requires n >= 2");

    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n - 1));
    ReducedState reduced;
    reduced.coin_dim = n;
    reduced.t_cap = full.t_cap;
    reduced.amplitudes.assign((full.t_cap + 1) * 2, cx_double(0.0, 0.0));

    double residual_sq = 0.0;
    for (std::size_t x = 0; x <= full.t_cap; ++x) {
        reduced.at(x, reduced_forward) = full.at(x, forward_slot);
        cx_double sum(0.0, 0.0);
        for (std::size_t k = 1; k < n; ++k)
            sum += full.at(x, loop_slot(k));
        reduced.at(x, reduced_loop_super) = sum * inv_sqrt;
        // Distance from the symmetric subspace, slot by slot; subtracting
        // squared norms instead would cancel catastrophically.
        const cx_double mean = sum / static_cast<double>(n - 1);
        for (std::size_t k = 1; k < n; ++k)
            residual_sq += std::norm(full.at(x, loop_slot(k)) - mean);
    }
    return {std::move(reduced), std::sqrt(residual_sq)};
}

struct EquivalenceReport {
    std::size_t n = 0;
    std::size_t t = 0;
    double tolerance = 0.0;
    double max_amplitude_diff = 0.0;    // over (position, {forward, loop-super})
    double max_probability_diff = 0.0;  // over positions
    double residual_norm = 0.0;         // component outside the subspace
    bool passed = false;
};

// Runs the full walk (natural pairing, plain loops) and the reduced walk
// with identical (n, t) and compares them after projection.
inline EquivalenceReport equivalence_check(std::size_t n, std::size_t t,
                                           double tolerance)
{
    if (n < 2)
        throw std::invalid_argument("equivalence_check: n must be >= 2");

    WalkConfig config;
    config.n = n;
    config.steps = t;
    config.pairing = PairingMode::natural;
    const FullState full = evolve(config);
    const ReducedState reduced = evolve_reduced(n, t);
    auto [projected, residual] = project_to_reduced(full);

    EquivalenceReport report;
    report.n = n;
    report.t = t;
    report.tolerance = tolerance;
    report.residual_norm = residual;
    for (std::size_t i = 0; i < projected.amplitudes.size(); ++i)
        report.max_amplitude_diff = std::max(
            report.max_amplitude_diff,
            std::abs(projected.amplitudes[i] - reduced.amplitudes[i]));

    const PositionDistribution full_dist = position_distribution(full);
    for (std::size_t x = 0; x <= t; ++x) {
        const double p_reduced = std::norm(reduced.at(x, reduced_forward)) +
                                 std::norm(reduced.at(x, reduced_loop_super));
        report.max_probability_diff =
            std::max(report.max_probability_diff,
                     std::abs(full_dist.probabilities[x] - p_reduced));
    }
    report.passed = report.max_amplitude_diff <= tolerance;
    return report;
}

// Position law of a reduced state, for the analysis and CLI layers.
inline PositionDistribution position_distribution(const ReducedState& state)
{
    PositionDistribution dist;
    dist.probabilities.assign(state.t_cap + 1, 0.0);
    for (std::size_t x = 0; x <= state.t_cap; ++x)
        dist.probabilities[x] = std::norm(state.at(x, reduced_forward)) +
                                std::norm(state.at(x, reduced_loop_super));
    return dist;
}

}  // namespace dqwalk
