#pragma once

#include <vector>

namespace anticor {

struct AnnualizationConfig {
    double trading_days_per_year = 252.0;
    double risk_free_rate = 0.04;
};

struct PerformanceReport {
    double total_return = 1.0;       // dollars per $1
    double annualized_return = 0.0;  // fraction per year
    double annualized_risk = 0.0;    // fraction per year
    double sharpe = 0.0;             // NaN when risk is zero
    std::size_t n_days = 0;

    bool sharpe_defined() const;
};

// Annualized return from the geometric mean of daily wealth ratios,
// annualized risk from their sample standard deviation (divisor n-1)
// scaled by sqrt(trading days/year).
PerformanceReport annualize(const std::vector<double>& daily_returns,
                            const AnnualizationConfig& cfg = {});

}  // namespace anticor
