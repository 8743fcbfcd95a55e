#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "anticor/market_data.hpp"
#include "anticor/portfolio_core.hpp"

namespace anticor {

// An online trading strategy. The engine calls next() once before each
// trading day: after `days` observed days of `history` (only rows < days may
// be read), with `holdings` the current drifted portfolio, it returns the
// portfolio to rebalance to. The first call has days == 0 and uniform
// holdings.
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;
    virtual void reset(std::size_t num_assets) = 0;
    virtual Portfolio next(const MarketSequence& history, std::size_t days,
                           const Portfolio& holdings) = 0;
};

using StrategyPtr = std::unique_ptr<Strategy>;

// Buy-and-hold: invests per the initial portfolio and never trades again.
StrategyPtr bah(Portfolio b);
StrategyPtr u_bah();

// Constant-rebalanced: rebalances to the same portfolio every day.
StrategyPtr cbal(Portfolio b);
StrategyPtr u_cbal();

// Exponentiated-gradient update with learning rate eta; uniform start.
StrategyPtr eg(double eta);

// Universal portfolio via Monte Carlo over a Dirichlet(1/2,...,1/2) prior:
// n_samples constant-rebalanced portfolios are drawn once per run and the
// daily portfolio is their wealth-weighted average.
StrategyPtr universal(std::size_t n_samples, std::uint64_t seed);

// LZ78 winner prediction: the daily best-performing asset index feeds an
// incremental parse tree; next-day weights are the current context's child
// counts with add-one smoothing.
StrategyPtr lz_strategy();

// Mean-reversion rule trading on cross-correlations of consecutive
// log-return windows of size w.
StrategyPtr anticor_w(std::size_t w);

// Hindsight benchmarks ------------------------------------------------------

// Indicator portfolio of the stock with the highest compound return; ties go
// to the lowest index.
Portfolio best_stock_hindsight(const MarketSequence& x);

struct CbalStarResult {
    Portfolio portfolio;
    double total_return;
    std::size_t iterations;
    bool converged;
};

// Hindsight-optimal constant-rebalanced portfolio: maximizes sum_t log(b.x_t)
// by a multiplicative ascent from the uniform point, with vertex restarts so
// the result never falls below the best single stock.
CbalStarResult cbal_star(const MarketSequence& x, double tol = 1e-10,
                         std::size_t max_iterations = 10000);

// Strategy ids accepted by the CLI / report layer.
const std::map<std::string, std::string>& strategy_catalog();

}  // namespace anticor
