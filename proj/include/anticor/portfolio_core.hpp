#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "anticor/market_data.hpp"

namespace anticor {

// Nonnegative weights summing to 1, renormalized on construction.
class Portfolio {
public:
    explicit Portfolio(std::vector<double> weights);

    static Portfolio uniform(std::size_t m);
    static Portfolio single(std::size_t m, std::size_t j);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t j) const { return weights_[j]; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

// Cumulative wealth per $1 invested; values[0] == 1, length n+1.
struct WealthSeries {
    std::vector<double> values;

    double final_wealth() const { return values.back(); }

    // Daily wealth ratios values[t+1]/values[t], length n.
    std::vector<double> daily_ratios() const;
};

double daily_return(const Portfolio& b, std::span<const double> x);

// Post-move holdings: b(j)x(j) / (b.x).
Portfolio drift(const Portfolio& b, std::span<const double> x);

struct ReturnResult {
    double total;
    WealthSeries wealth;
};

// Compound return of a portfolio sequence, one portfolio per day.
// Accumulates in log space.
ReturnResult total_return(const std::vector<Portfolio>& portfolios, const MarketSequence& x);

// Proportional-commission return: each day's factor is
//   b_t.x_t * (1 - (gamma/2) * sum_j |b_t(j) - prev_holdings(j)|)
// where prev_holdings is the previous day's drifted portfolio (all cash
// before day 1, so day 1 is charged gamma/2 on the full purchase).
ReturnResult commission_return(const std::vector<Portfolio>& portfolios,
                               const MarketSequence& x, double gamma);

}  // namespace anticor
