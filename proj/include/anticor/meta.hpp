#pragma once

#include <vector>

#include "anticor/engine.hpp"
#include "anticor/market_data.hpp"
#include "anticor/strategies.hpp"

namespace anticor {

// Daily wealth ratios of a strategy run commission-free on x (length n).
std::vector<double> strategy_as_asset(Strategy& s, const MarketSequence& x);

// Uniform buy-and-hold across wealth curves: wealth(t) = mean_k wealth_k(t).
WealthSeries bah_over(const std::vector<WealthSeries>& curves);

// The anticor_w family for w = 2..W.
std::vector<StrategyPtr> anticor_family(std::size_t max_window);

// One strategy family run jointly on a market: per-strategy runs, the derived
// market of their wealth ratios, and the uniform buy-and-hold combination.
struct FamilyRun {
    std::vector<StrategyRun> runs;
    MarketSequence derived;  // asset k's day-t relative = wealth_k(t)/wealth_k(t-1)
    WealthSeries bah_wealth;
};

FamilyRun run_family(const std::vector<StrategyPtr>& family, const MarketSequence& x);

// BAH_W(ANTICOR): uniform buy-and-hold over anticor_w, w = 2..W, on x.
FamilyRun anti1(const MarketSequence& x, std::size_t max_window = 30);

struct Anti2Run {
    FamilyRun level1;  // anticor_w on the real market
    FamilyRun level2;  // anticor_w' on the level-1 wealth-curve market
};

// BAH_W(ANTICOR(ANTICOR)): the level-1 wealth curves form a derived market
// traded by a second anticor family; the result is the uniform buy-and-hold
// over that second family.
Anti2Run anti2(const MarketSequence& x, std::size_t max_window = 30);

// Effective real-asset portfolios of a buy-and-hold over a strategy family:
// meta weights (proportional to accumulated wealth) times inner portfolios.
// Commissions under compounding are charged against this flattened sequence,
// since only real assets trade.
std::vector<Portfolio> flatten_bah(const FamilyRun& fr);

// Two-level flattening for anticor-over-anticor.
std::vector<Portfolio> flatten_anti2(const Anti2Run& ar);

}  // namespace anticor
