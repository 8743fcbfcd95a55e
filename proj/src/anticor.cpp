#include "anticor/anticor.hpp"

#include <algorithm>
#include <cmath>

#include "anticor/errors.hpp"

namespace anticor {

WindowStats log_windows(const MarketSequence& x, std::size_t t, std::size_t w) {
    if (w < 2) throw ArgumentError("window size must be at least 2");
    if (t < 2 * w)
        throw InsufficientHistoryError("need at least " + std::to_string(2 * w) +
                                       " days of history, have " + std::to_string(t));
    if (t > x.days()) throw DimensionError("day index exceeds available history");

    std::size_t m = x.assets();
    WindowStats s;
    s.window = w;
    s.lx1 = Matrix(w, m);
    s.lx2 = Matrix(w, m);
    for (std::size_t r = 0; r < w; ++r)
        for (std::size_t j = 0; j < m; ++j) {
            s.lx1.at(r, j) = std::log(x.relatives.at(t - 2 * w + r, j));
            s.lx2.at(r, j) = std::log(x.relatives.at(t - w + r, j));
        }

    s.mu1.assign(m, 0.0);
    s.mu2.assign(m, 0.0);
    s.sigma1.assign(m, 0.0);
    s.sigma2.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < w; ++r) {
            s.mu1[j] += s.lx1.at(r, j);
            s.mu2[j] += s.lx2.at(r, j);
        }
        s.mu1[j] /= static_cast<double>(w);
        s.mu2[j] /= static_cast<double>(w);
        double v1 = 0.0, v2 = 0.0;
        for (std::size_t r = 0; r < w; ++r) {
            double d1 = s.lx1.at(r, j) - s.mu1[j];
            double d2 = s.lx2.at(r, j) - s.mu2[j];
            v1 += d1 * d1;
            v2 += d2 * d2;
        }
        s.sigma1[j] = std::sqrt(v1 / static_cast<double>(w - 1));
        s.sigma2[j] = std::sqrt(v2 / static_cast<double>(w - 1));
    }
    return s;
}

CorrelationPair cross_correlation(const WindowStats& s) {
    std::size_t m = s.mu1.size();
    std::size_t w = s.window;
    CorrelationPair c;
    c.m_cov = Matrix(m, m);
    c.m_cor = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double cov = 0.0;
            for (std::size_t r = 0; r < w; ++r)
                cov += (s.lx1.at(r, i) - s.mu1[i]) * (s.lx2.at(r, j) - s.mu2[j]);
            cov /= static_cast<double>(w - 1);
            c.m_cov.at(i, j) = cov;
            double denom = s.sigma1[i] * s.sigma2[j];
            if (denom > 0.0)
                c.m_cor.at(i, j) = std::clamp(cov / denom, -1.0, 1.0);
            else
                c.m_cor.at(i, j) = 0.0;  // constant column: move no money
        }
    return c;
}

ClaimMatrix compute_claims(const CorrelationPair& c, const std::vector<double>& mu2) {
    std::size_t m = mu2.size();
    if (c.m_cor.rows() != m)
        throw DimensionError("correlation/mean dimension mismatch");

    std::vector<double> anti(m);
    for (std::size_t h = 0; h < m; ++h) {
        double d = c.m_cor.at(h, h);
        anti[h] = d < 0.0 ? -d : 0.0;
    }

    ClaimMatrix cl;
    cl.claims = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (mu2[i] > mu2[j] && c.m_cor.at(i, j) > 0.0)
                cl.claims.at(i, j) = c.m_cor.at(i, j) + anti[i] + anti[j];
        }
    return cl;
}

Portfolio apply_transfers(const ClaimMatrix& cl, const Portfolio& b_hat) {
    std::size_t m = b_hat.size();
    if (cl.claims.rows() != m)
        throw DimensionError("claim/portfolio dimension mismatch");

    std::vector<double> out(b_hat.weights());
    for (std::size_t i = 0; i < m; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) row_sum += cl.claims.at(i, j);
        if (row_sum <= 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            double transfer = b_hat[i] * cl.claims.at(i, j) / row_sum;
            out[i] -= transfer;
            out[j] += transfer;
        }
    }
    // rounding can leave tiny negatives after a full outflow
    for (double& v : out) v = std::max(v, 0.0);
    return Portfolio(std::move(out));
}

Portfolio anticor_step(std::size_t w, std::size_t t, const MarketSequence& history,
                       const Portfolio& b_hat) {
    if (w < 2) throw ArgumentError("window size must be at least 2");
    if (t < 2 * w) return b_hat;
    WindowStats s = log_windows(history, t, w);
    CorrelationPair c = cross_correlation(s);
    ClaimMatrix cl = compute_claims(c, s.mu2);
    return apply_transfers(cl, b_hat);
}

}  // namespace anticor
