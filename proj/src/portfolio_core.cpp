#include "anticor/portfolio_core.hpp"

#include <cassert>
#include <cmath>

#include "anticor/errors.hpp"

namespace anticor {

Portfolio::Portfolio(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw DimensionError("portfolio must have at least one weight");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw ValidationError("portfolio weights must be nonnegative and finite");
        sum += w;
    }
    if (!(sum > 0.0)) throw ValidationError("portfolio weights must not all be zero");
    for (double& w : weights_) w /= sum;
}

Portfolio Portfolio::uniform(std::size_t m) {
    return Portfolio(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Portfolio Portfolio::single(std::size_t m, std::size_t j) {
    std::vector<double> w(m, 0.0);
    w.at(j) = 1.0;
    return Portfolio(std::move(w));
}

std::vector<double> WealthSeries::daily_ratios() const {
    std::vector<double> r;
    r.reserve(values.size() - 1);
    for (std::size_t t = 0; t + 1 < values.size(); ++t)
        r.push_back(values[t + 1] / values[t]);
    return r;
}

double daily_return(const Portfolio& b, std::span<const double> x) {
    if (b.size() != x.size())
        throw DimensionError("portfolio/market dimension mismatch");
    double r = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) r += b[j] * x[j];
    return r;
}

Portfolio drift(const Portfolio& b, std::span<const double> x) {
    if (b.size() != x.size())
        throw DimensionError("portfolio/market dimension mismatch");
    std::vector<double> w(b.size());
    for (std::size_t j = 0; j < x.size(); ++j) w[j] = b[j] * x[j];
    return Portfolio(std::move(w));
}

ReturnResult total_return(const std::vector<Portfolio>& portfolios, const MarketSequence& x) {
    if (portfolios.size() != x.days())
        throw DimensionError("need exactly one portfolio per day");
    WealthSeries ws;
    ws.values.reserve(x.days() + 1);
    ws.values.push_back(1.0);
    double log_wealth = 0.0;
    for (std::size_t t = 0; t < x.days(); ++t) {
        double r = daily_return(portfolios[t], std::span(x.day(t), x.assets()));
        log_wealth += std::log(r);
        ws.values.push_back(std::exp(log_wealth));
    }
    return {ws.values.back(), std::move(ws)};
}

ReturnResult commission_return(const std::vector<Portfolio>& portfolios,
                               const MarketSequence& x, double gamma) {
    if (portfolios.size() != x.days())
        throw DimensionError("need exactly one portfolio per day");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw ArgumentError("commission fraction must lie in [0, 1)");

    std::size_t m = x.assets();
    // All cash before day 1: the full initial purchase is a buy.
    std::vector<double> prev(m, 0.0);

    WealthSeries ws;
    ws.values.reserve(x.days() + 1);
    ws.values.push_back(1.0);
    double log_wealth = 0.0;
    for (std::size_t t = 0; t < x.days(); ++t) {
        const Portfolio& b = portfolios[t];
        double turnover = 0.0;
        for (std::size_t j = 0; j < m; ++j) turnover += std::abs(b[j] - prev[j]);
        double cost = 1.0 - (gamma / 2.0) * turnover;
        assert(cost > 0.0);  // turnover <= 2 and gamma < 1
        double r = daily_return(b, std::span(x.day(t), m));
        log_wealth += std::log(r * cost);
        ws.values.push_back(std::exp(log_wealth));
        prev = drift(b, std::span(x.day(t), m)).weights();
    }
    return {ws.values.back(), std::move(ws)};
}

}  // namespace anticor
