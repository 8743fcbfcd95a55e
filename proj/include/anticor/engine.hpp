#pragma once

#include <vector>

#include "anticor/market_data.hpp"
#include "anticor/portfolio_core.hpp"
#include "anticor/strategies.hpp"

namespace anticor {

struct StrategyRun {
    std::vector<Portfolio> portfolios;  // target portfolio per day, b_1..b_n
    WealthSeries wealth;                // commission-adjusted when gamma > 0
};

// Day-by-day online execution: the strategy sees history through day t and
// its drifted holdings, the engine charges proportional commission on each
// rebalance and compounds wealth in log space.
StrategyRun run_strategy(Strategy& s, const MarketSequence& x, double gamma = 0.0);

}  // namespace anticor
