#pragma once

#include <cstddef>
#include <vector>

#include "anticor/market_data.hpp"
#include "anticor/portfolio_core.hpp"

namespace anticor {

// Log relative prices over the two most recent length-w windows ending at
// day t, with per-column means and standard deviations (divisor w-1, matching
// the covariance so that the self-correlation of identical windows is 1).
struct WindowStats {
    std::size_t window = 0;
    Matrix lx1, lx2;                  // w x m each
    std::vector<double> mu1, mu2;     // column means
    std::vector<double> sigma1, sigma2;
};

struct CorrelationPair {
    Matrix m_cov;  // m x m
    Matrix m_cor;  // entries clamped into [-1, 1]; 0 where either sigma is 0
};

// Nonnegative wealth-shift intents; claims(i,i) == 0.
struct ClaimMatrix {
    Matrix claims;
};

// Windows cover days [t-2w+1, t-w] and [t-w+1, t], 1-indexed; t is the
// number of observed days. Requires t >= 2w.
WindowStats log_windows(const MarketSequence& x, std::size_t t, std::size_t w);

CorrelationPair cross_correlation(const WindowStats& s);

// claim(i,j) = m_cor(i,j) + A(i) + A(j), A(h) = |m_cor(h,h)| when negative,
// gated on mu2(i) > mu2(j) and m_cor(i,j) > 0 (both strict).
ClaimMatrix compute_claims(const CorrelationPair& c, const std::vector<double>& mu2);

// transfer(i,j) = b_hat(i) * claim(i,j) / sum_j claim(i,j); rows with no
// claims move nothing.
Portfolio apply_transfers(const ClaimMatrix& cl, const Portfolio& b_hat);

// One trading decision: identity during warm-up (t < 2w), otherwise the
// composition log_windows -> cross_correlation -> claims -> transfers.
Portfolio anticor_step(std::size_t w, std::size_t t, const MarketSequence& history,
                       const Portfolio& b_hat);

}  // namespace anticor
