#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <system_error>
#include <vector>

#include "dqwalk/analysis.hpp"
#include "dqwalk/engine.hpp"

namespace dqwalk {

inline const char* to_string(WalkMode mode)
{
    switch (mode) {
    case WalkMode::quantum:
        return "quantum";
    case WalkMode::classical:
        return "classical";
    case WalkMode::reduced:
        return "reduced";
    }
    return "?";
}

inline const char* to_string(PairingMode mode)
{
    return mode == PairingMode::natural ? "natural" : "random";
}

// Shortest decimal that round-trips the 64-bit float.
inline std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, ptr);
}

// Distribution schema: header `position,probability`, positions ascending,
// LF endings.
inline std::string distribution_csv(const PositionDistribution& dist)
{
    std::string out = "position,probability\n";
    for (std::size_t x = 0; x < dist.probabilities.size(); ++x) {
        out += std::to_string(x);
        out += ',';
        out += format_double(dist.probabilities[x]);
        out += '\n';
    }
    return out;
}

// Sweep schema: one row per record, empty fields where a column does not
// apply (pairing for non-quantum modes, seed for non-random pairings,
// interval and tail for the classical walk).
inline std::string sweep_csv(const std::vector<SweepRecord>& records)
{
    std::string out =
        "n,t,mode,pairing,seed,mean,variance,interval_lo,interval_hi,tail_mass\n";
    for (const SweepRecord& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.t);
        out += ',';
        out += to_string(r.mode);
        out += ',';
        if (r.pairing)
            out += to_string(*r.pairing);
        out += ',';
        if (r.seed)
            out += std::to_string(*r.seed);
        out += ',';
        out += format_double(r.mean);
        out += ',';
        out += format_double(r.variance);
        out += ',';
        if (r.interval_lo)
            out += format_double(*r.interval_lo);
        out += ',';
        if (r.interval_hi)
            out += format_double(*r.interval_hi);
        out += ',';
        if (r.tail)
            out += format_double(*r.tail);
        out += '\n';
    }
    return out;
}

}  // namespace dqwalk
