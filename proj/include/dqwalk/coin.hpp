#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dqwalk/state.hpp"

namespace dqwalk {

// Dense n x n unitary coin, row-major.
struct CoinMatrix {
    std::size_t dim = 0;
    std::vector<cx_double> entries;

    cx_double& operator()(std::size_t row, std::size_t col)
    {
        return entries[row * dim + col];
    }
    const cx_double& operator()(std::size_t row, std::size_t col) const
    {
        return entries[row * dim + col];
    }
};

// Discrete Fourier transform scaled to be unitary: entry (j,k) is
// omega^{jk} / sqrt(n) with omega = exp(2 pi i / n). Slot 0 is the forward
// edge, slots 1..n-1 the loops. Each phase comes from cos/sin of the
// argument reduced mod n, so the error stays at rounding level for any j*k.
inline CoinMatrix fourier_coin(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("fourier_coin: n must be >= 1");
    CoinMatrix coin{n, std::vector<cx_double>(n * n)};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t m = (j * k) % n;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) /
                                 static_cast<double>(n);
            coin(j, k) = cx_double(scale * std::cos(angle), scale * std::sin(angle));
        }
    }
    return coin;
}

// The 2x2 coin of the reduced walk on {forward, loop-superposition}:
// [[beta, alpha], [alpha, -beta]].
struct ReducedCoin {
    double alpha;  // sqrt((n-1)/n)
    double beta;   // 1/sqrt(n)
};

inline ReducedCoin reduced_coin(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("reduced_coin: n must be >= 2 (no loop subspace)");
    const double nd = static_cast<double>(n);
    return {std::sqrt((nd - 1.0) / nd), 1.0 / std::sqrt(nd)};
}

// Applies the coin within each position's edge subspace: the length-n
// amplitude vector over slots 0..n-1 is replaced by coin times that
// vector. Interior loop slots carry the identity coin (each auxiliary
// vertex has a single outgoing edge) and positions stay untouched.
inline void apply_coin(FullState& state, const CoinMatrix& coin)
{
    const std::size_t n = state.coin_dim;
    if (coin.dim != n)
        throw std::invalid_argument("apply_coin: coin dimension does not match state");
    if (n == 1)
        return;  // 1x1 Fourier coin is the identity

    const std::size_t stride = state.stride();
    std::vector<cx_double> mixed(n);
    for (std::size_t pos = 0; pos <= state.frontier; ++pos) {
        cx_double* v = state.amplitudes.data() + pos * stride;
        for (std::size_t j = 0; j < n; ++j) {
            cx_double acc(0.0, 0.0);
            const cx_double* row = coin.entries.data() + j * n;
            for (std::size_t k = 0; k < n; ++k)
                acc += row[k] * v[k];
            mixed[j] = acc;
        }
        for (std::size_t j = 0; j < n; ++j)
            v[j] = mixed[j];
    }
}

}  // namespace dqwalk
