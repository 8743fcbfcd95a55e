#include "anticor/metrics.hpp"

#include <cmath>
#include <limits>

#include "anticor/errors.hpp"

namespace anticor {

bool PerformanceReport::sharpe_defined() const { return !std::isnan(sharpe); }

PerformanceReport annualize(const std::vector<double>& daily_returns,
                            const AnnualizationConfig& cfg) {
    std::size_t n = daily_returns.size();
    if (n < 2) throw DimensionError("annualization needs at least 2 daily returns");

    double log_total = 0.0;
    double mean = 0.0;
    for (double r : daily_returns) {
        if (!(r > 0.0)) throw ValidationError("daily wealth ratios must be positive");
        log_total += std::log(r);
        mean += r;
    }
    mean /= static_cast<double>(n);

    double ss = 0.0;
    for (double r : daily_returns) {
        double d = r - mean;
        ss += d * d;
    }
    double daily_std = std::sqrt(ss / static_cast<double>(n - 1));

    PerformanceReport rep;
    rep.n_days = n;
    rep.total_return = std::exp(log_total);
    rep.annualized_return =
        std::exp(log_total * cfg.trading_days_per_year / static_cast<double>(n)) - 1.0;
    rep.annualized_risk = daily_std * std::sqrt(cfg.trading_days_per_year);
    rep.sharpe = rep.annualized_risk > 0.0
                     ? (rep.annualized_return - cfg.risk_free_rate) / rep.annualized_risk
                     : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

}  // namespace anticor
