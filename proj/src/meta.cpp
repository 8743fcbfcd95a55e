#include "anticor/meta.hpp"

#include <string>

#include "anticor/errors.hpp"

namespace anticor {

std::vector<double> strategy_as_asset(Strategy& s, const MarketSequence& x) {
    return run_strategy(s, x).wealth.daily_ratios();
}

WealthSeries bah_over(const std::vector<WealthSeries>& curves) {
    if (curves.empty()) throw DimensionError("buy-and-hold needs at least one wealth curve");
    std::size_t len = curves.front().values.size();
    for (const auto& c : curves)
        if (c.values.size() != len)
            throw DimensionError("wealth curves have mismatched lengths");
    WealthSeries out;
    out.values.assign(len, 0.0);
    for (const auto& c : curves)
        for (std::size_t t = 0; t < len; ++t) out.values[t] += c.values[t];
    for (double& v : out.values) v /= static_cast<double>(curves.size());
    return out;
}

std::vector<StrategyPtr> anticor_family(std::size_t max_window) {
    if (max_window < 2) throw ArgumentError("maximal window must be at least 2");
    std::vector<StrategyPtr> family;
    for (std::size_t w = 2; w <= max_window; ++w) family.push_back(anticor_w(w));
    return family;
}

FamilyRun run_family(const std::vector<StrategyPtr>& family, const MarketSequence& x) {
    if (family.empty()) throw DimensionError("empty strategy family");
    FamilyRun fr;
    fr.runs.reserve(family.size());
    for (const auto& s : family) fr.runs.push_back(run_strategy(*s, x));

    std::size_t k = family.size(), n = x.days();
    if (k >= 2) {
        Matrix rel(n, k);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) {
            names.push_back(family[i]->name());
            for (std::size_t t = 0; t < n; ++t)
                rel.at(t, i) = fr.runs[i].wealth.values[t + 1] / fr.runs[i].wealth.values[t];
        }
        fr.derived = MarketSequence::make(std::move(names), std::move(rel));
    }

    std::vector<WealthSeries> curves;
    curves.reserve(k);
    for (const auto& r : fr.runs) curves.push_back(r.wealth);
    fr.bah_wealth = bah_over(curves);
    return fr;
}

FamilyRun anti1(const MarketSequence& x, std::size_t max_window) {
    return run_family(anticor_family(max_window), x);
}

Anti2Run anti2(const MarketSequence& x, std::size_t max_window) {
    if (max_window < 3)
        throw ArgumentError("compounding needs at least two windows (maximal window >= 3)");
    Anti2Run ar;
    ar.level1 = run_family(anticor_family(max_window), x);
    ar.level2 = run_family(anticor_family(max_window), ar.level1.derived);
    return ar;
}

std::vector<Portfolio> flatten_bah(const FamilyRun& fr) {
    std::size_t k = fr.runs.size();
    std::size_t n = fr.runs.front().portfolios.size();
    std::size_t m = fr.runs.front().portfolios.front().size();
    std::vector<Portfolio> flat;
    flat.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<double> w(m, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            double stake = fr.runs[i].wealth.values[t];  // start-of-day value of a $1/k sleeve
            const Portfolio& b = fr.runs[i].portfolios[t];
            for (std::size_t j = 0; j < m; ++j) w[j] += stake * b[j];
        }
        flat.emplace_back(std::move(w));
    }
    return flat;
}

std::vector<Portfolio> flatten_anti2(const Anti2Run& ar) {
    std::size_t k1 = ar.level1.runs.size();
    std::size_t k2 = ar.level2.runs.size();
    std::size_t n = ar.level1.runs.front().portfolios.size();
    std::size_t m = ar.level1.runs.front().portfolios.front().size();
    std::vector<Portfolio> flat;
    flat.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<double> w(m, 0.0);
        for (std::size_t q = 0; q < k2; ++q) {
            double stake = ar.level2.runs[q].wealth.values[t];
            const Portfolio& c = ar.level2.runs[q].portfolios[t];  // over level-1 strategies
            for (std::size_t i = 0; i < k1; ++i) {
                double s = stake * c[i];
                if (s == 0.0) continue;
                const Portfolio& b = ar.level1.runs[i].portfolios[t];
                for (std::size_t j = 0; j < m; ++j) w[j] += s * b[j];
            }
        }
        flat.emplace_back(std::move(w));
    }
    return flat;
}

}  // namespace anticor
