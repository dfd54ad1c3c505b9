#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dqwalk {

using cx_double = std::complex<double>;

// Edge-slot layout at one position, for coin dimension n and loop length L:
//
//   slot 0                            forward edge x -> x+1
//   slot k,                1<=k<=n-1  first edge of loop k (coin-facing)
//   slot n+(k-1)(L-1)+(d-1), 1<=d<=L-1  interior edge of loop k at depth d
//
// Interior slots exist only for L >= 2; amplitude held there belongs to the
// base position x.

inline constexpr std::size_t forward_slot = 0;

inline constexpr std::size_t loop_slot(std::size_t k) { return k; }

inline constexpr std::size_t slots_per_position(std::size_t n, std::size_t loop_length)
{
    return n + (n - 1) * (loop_length - 1);
}

inline constexpr std::size_t interior_slot(std::size_t n, std::size_t loop_length,
                                           std::size_t k, std::size_t depth)
{
    return n + (k - 1) * (loop_length - 1) + (depth - 1);
}

// Walker state over the edge basis, dense over positions 0..t_cap.
// Positions above `frontier` are exactly zero; the evolution keeps
// frontier <= number of steps taken, since the shift never moves
// amplitude backward.
struct FullState {
    std::size_t coin_dim = 1;
    std::size_t loop_length = 1;
    std::size_t t_cap = 0;
    std::size_t frontier = 0;
    std::vector<cx_double> amplitudes;  // (t_cap+1) * stride(), position-major

    FullState() = default;

    FullState(std::size_t n, std::size_t t_cap_, std::size_t L = 1)
        : coin_dim(n), loop_length(L), t_cap(t_cap_)
    {
        if (n < 1)
            throw std::invalid_argument("FullState: coin dimension must be >= 1");
        if (L < 1)
            throw std::invalid_argument("FullState: loop length must be >= 1");
        amplitudes.assign((t_cap + 1) * stride(), cx_double(0.0, 0.0));
    }

    std::size_t stride() const { return slots_per_position(coin_dim, loop_length); }

    cx_double& at(std::size_t pos, std::size_t slot)
    {
        return amplitudes[pos * stride() + slot];
    }
    const cx_double& at(std::size_t pos, std::size_t slot) const
    {
        return amplitudes[pos * stride() + slot];
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

}  // namespace dqwalk
