#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dqwalk/engine.hpp"
#include "dqwalk/reduce.hpp"

namespace dqwalk {

// The interval [(1-beta)t/2, (1+beta)t/2] that carries all but a
// super-polynomially small part of the quantum walk's mass.
struct IntervalBound {
    double lo;
    double hi;
    double beta;
    std::size_t t;
};

inline IntervalBound interval_bounds(std::size_t n, std::size_t t)
{
    if (n < 2)
        throw std::invalid_argument("interval_bounds: n must be >= 2");
    const double beta = 1.0 / std::sqrt(static_cast<double>(n));
    const double td = static_cast<double>(t);
    return {0.5 * (1.0 - beta) * td, 0.5 * (1.0 + beta) * td, beta, t};
}

// Probability outside [lo, hi]; integer position x counts as inside iff
// lo <= x <= hi (endpoints inclusive).
inline double tail_mass(const PositionDistribution& dist, const IntervalBound& bound)
{
    double outside = 0.0;
    for (std::size_t x = 0; x < dist.probabilities.size(); ++x) {
        const double xd = static_cast<double>(x);
        if (xd < bound.lo || xd > bound.hi)
            outside += dist.probabilities[x];
    }
    return outside;
}

struct Moments {
    double mean;
    double variance;
};

inline Moments moments(const PositionDistribution& dist)
{
    const double mean = expected_position(dist);
    double var = 0.0;
    for (std::size_t x = 0; x < dist.probabilities.size(); ++x) {
        const double d = static_cast<double>(x) - mean;
        var += d * d * dist.probabilities[x];
    }
    return {mean, var};
}

enum class WalkMode { quantum, classical, reduced };

// One sweep entry: a walk configuration with its summary statistics.
// Interval and tail fields are set for quantum and reduced modes with
// n >= 2; pairing and seed only where they apply.
struct SweepRecord {
    std::size_t n = 0;
    std::size_t t = 0;
    WalkMode mode = WalkMode::quantum;
    std::optional<PairingMode> pairing;
    std::optional<std::uint64_t> seed;
    double mean = 0.0;
    double variance = 0.0;
    std::optional<double> interval_lo;
    std::optional<double> interval_hi;
    std::optional<double> tail;
    std::optional<PositionDistribution> distribution;  // kept on request
};

struct SweepRequest {
    std::vector<std::size_t> n_values;
    std::size_t t = 100;
    std::vector<WalkMode> modes;
    PairingMode pairing = PairingMode::natural;
    std::vector<std::uint64_t> seeds;     // one record per seed when random
    bool keep_distributions = false;
    std::size_t full_mode_max_n = 64;     // quantum entries above this use the
                                          // equivalent reduced walk
    std::size_t threads = 0;              // 0 = hardware concurrency
};

namespace detail {

inline void parallel_for_index(std::size_t count, std::size_t threads,
                               const std::function<void(std::size_t)>& fn)
{
    if (threads == 0)
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace detail

inline SweepRecord run_sweep_entry(std::size_t n, std::size_t t, WalkMode mode,
                                   PairingMode pairing,
                                   std::optional<std::uint64_t> seed,
                                   bool keep_distribution,
                                   std::size_t full_mode_max_n = 64)
{
    SweepRecord record;
    record.n = n;
    record.t = t;
    record.mode = mode;

    PositionDistribution dist;
    switch (mode) {
    case WalkMode::classical:
        dist = classical_distribution(n, t);
        break;
    case WalkMode::reduced:
        dist = position_distribution(evolve_reduced(n, t));
        break;
    case WalkMode::quantum:
        record.pairing = pairing;
        if (pairing == PairingMode::random) {
            if (n > full_mode_max_n)
                throw std::invalid_argument(
                    "sweep: random pairing requires the full walk (n <= " +
                    std::to_string(full_mode_max_n) + ")");
            record.seed = seed.value_or(0);
            WalkConfig config{n, t, PairingMode::random, record.seed.value(), 1, false};
            dist = position_distribution(evolve(config));
        } else if (n > full_mode_max_n) {
            // Equivalent reduced walk keeps large-n sweeps at desk scale.
            dist = position_distribution(evolve_reduced(n, t));
        } else {
            WalkConfig config{n, t, PairingMode::natural, 0, 1, false};
            dist = position_distribution(evolve(config));
        }
        break;
    }

    const Moments m = moments(dist);
    record.mean = m.mean;
    record.variance = m.variance;
    if (mode != WalkMode::classical && n >= 2) {
        const IntervalBound bound = interval_bounds(n, t);
        record.interval_lo = bound.lo;
        record.interval_hi = bound.hi;
        record.tail = tail_mass(dist, bound);
    }
    if (keep_distribution)
        record.distribution = std::move(dist);
    return record;
}

// One record per (n, mode, seed), ordered by input order regardless of
// which thread computed it. Deterministic in the request.
inline std::vector<SweepRecord> sweep(const SweepRequest& request)
{
    struct Entry {
        std::size_t n;
        WalkMode mode;
        std::optional<std::uint64_t> seed;
    };
    std::vector<Entry> entries;
    for (std::size_t n : request.n_values) {
        for (WalkMode mode : request.modes) {
            const bool seeded = mode == WalkMode::quantum &&
                                request.pairing == PairingMode::random;
            if (seeded && !request.seeds.empty()) {
                for (std::uint64_t seed : request.seeds)
                    entries.push_back({n, mode, seed});
            } else {
                entries.push_back({n, mode, seeded ? std::optional<std::uint64_t>(0)
                                                   : std::nullopt});
            }
        }
    }

    std::vector<SweepRecord> records(entries.size());
    detail::parallel_for_index(entries.size(), request.threads, [&](std::size_t i) {
        const Entry& e = entries[i];
        records[i] = run_sweep_entry(e.n, request.t, e.mode, request.pairing, e.seed,
                                     request.keep_distributions,
                                     request.full_mode_max_n);
    });
    return records;
}

}  // namespace dqwalk
