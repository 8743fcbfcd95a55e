#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "anticor/engine.hpp"
#include "anticor/market_data.hpp"
#include "anticor/meta.hpp"
#include "anticor/metrics.hpp"
#include "anticor/strategies.hpp"

namespace anticor {

struct StrategyParams {
    std::size_t w = 2;             // anticor window
    std::size_t max_window = 30;   // anti1/anti2 maximal window
    double eta = 0.01;             // eg learning rate
    std::size_t n_samples = 10000; // universal Monte Carlo samples
    std::uint64_t seed = 1;
    double tol = 1e-10;            // cbal-star convergence tolerance
};

struct RunSpec {
    std::string strategy;  // id from strategy_catalog()
    StrategyParams params;
    double gamma = 0.0;
};

struct RunOutput {
    std::vector<Portfolio> portfolios;  // realized real-asset portfolio per day
    WealthSeries wealth;                // commission-adjusted
    PerformanceReport report;
};

RunOutput run(const RunSpec& spec, const MarketSequence& x);

struct SweepResult {
    std::string axis_name;
    std::vector<double> axis;  // strictly increasing
    std::vector<std::pair<std::string, std::vector<double>>> series;  // final returns
};

// Final return of anticor_w per window size, with market and best-stock
// baselines.
SweepResult sweep_window(const MarketSequence& x, const std::vector<std::size_t>& windows,
                         double gamma = 0.0);

// Final return of BAH_W(anticor) per maximal window W.
SweepResult sweep_max_window(const MarketSequence& x, const std::vector<std::size_t>& max_windows,
                             double gamma = 0.0);

// Final return of BAH_W(anticor) per commission rate.
SweepResult sweep_commission(const MarketSequence& x, const std::vector<double>& gammas,
                             std::size_t max_window = 30);

enum class ReportFormat { Tsv, Csv, SvgLines };

ReportFormat parse_report_format(const std::string& name);

struct TableRow {
    std::string name;
    PerformanceReport perf;
};

// Table mode truncates numeric cells to two decimals; output is byte-stable
// for fixed inputs.
void emit_table(std::ostream& out, const std::vector<TableRow>& rows, ReportFormat format);
void emit_sweep(std::ostream& out, const SweepResult& sweep, ReportFormat format);

}  // namespace anticor
