#pragma once

#include <random>
#include <vector>

#include "anticor/market_data.hpp"

namespace testutil {

inline anticor::MarketSequence from_rows(const std::vector<std::vector<double>>& rows) {
    anticor::Matrix rel(rows.size(), rows[0].size());
    for (std::size_t t = 0; t < rows.size(); ++t)
        for (std::size_t j = 0; j < rows[t].size(); ++j) rel.at(t, j) = rows[t][j];
    std::vector<std::string> names;
    for (std::size_t j = 0; j < rows[0].size(); ++j) names.push_back("A" + std::to_string(j));
    return anticor::MarketSequence::make(std::move(names), std::move(rel));
}

// Random market with relatives uniform in [lo, hi].
inline anticor::MarketSequence random_market(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                             double lo = 0.5, double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    anticor::Matrix rel(n, m);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t j = 0; j < m; ++j) rel.at(t, j) = dist(rng);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < m; ++j) names.push_back("A" + std::to_string(j));
    return anticor::MarketSequence::make(std::move(names), std::move(rel));
}

// Shared property-test corpus: assorted sizes, seeded deterministically.
inline std::vector<anticor::MarketSequence> property_corpus(std::size_t count = 25,
                                                            std::size_t max_n = 60,
                                                            std::size_t max_m = 5) {
    std::mt19937_64 rng(20260823);
    std::vector<anticor::MarketSequence> corpus;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = 4 + rng() % (max_n - 3);
        std::size_t m = 2 + rng() % (max_m - 1);
        corpus.push_back(random_market(rng, n, m));
    }
    return corpus;
}

}  // namespace testutil
