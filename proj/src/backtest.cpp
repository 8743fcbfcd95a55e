#include "anticor/backtest.hpp"

#include <future>
#include <span>

#include "anticor/errors.hpp"

namespace anticor {

StrategyRun run_strategy(Strategy& s, const MarketSequence& x, double gamma) {
    std::size_t n = x.days(), m = x.assets();
    s.reset(m);

    std::vector<Portfolio> portfolios;
    portfolios.reserve(n);
    Portfolio b = s.next(x, 0, Portfolio::uniform(m));
    for (std::size_t t = 0; t < n; ++t) {
        portfolios.push_back(b);
        if (t + 1 < n) {
            Portfolio holdings = drift(b, std::span(x.day(t), m));
            b = s.next(x, t + 1, holdings);
        }
    }
    auto rr = commission_return(portfolios, x, gamma);
    return {std::move(portfolios), std::move(rr.wealth)};
}

namespace {

RunOutput finish(std::vector<Portfolio> portfolios, WealthSeries wealth) {
    PerformanceReport rep = annualize(wealth.daily_ratios());
    return {std::move(portfolios), std::move(wealth), rep};
}

}  // namespace

RunOutput run(const RunSpec& spec, const MarketSequence& x) {
    if (!(spec.gamma >= 0.0 && spec.gamma < 1.0))
        throw ArgumentError("commission fraction must lie in [0, 1)");
    const std::string& id = spec.strategy;

    if (id == "anti1") {
        FamilyRun fr = anti1(x, spec.params.max_window);
        auto flat = flatten_bah(fr);
        auto rr = commission_return(flat, x, spec.gamma);
        return finish(std::move(flat), std::move(rr.wealth));
    }
    if (id == "anti2") {
        Anti2Run ar = anti2(x, spec.params.max_window);
        auto flat = flatten_anti2(ar);
        auto rr = commission_return(flat, x, spec.gamma);
        return finish(std::move(flat), std::move(rr.wealth));
    }

    StrategyPtr s;
    if (id == "u-bah") s = u_bah();
    else if (id == "u-cbal") s = u_cbal();
    else if (id == "best-stock") s = bah(best_stock_hindsight(x));
    else if (id == "cbal-star") s = cbal(cbal_star(x, spec.params.tol).portfolio);
    else if (id == "eg") s = eg(spec.params.eta);
    else if (id == "universal") s = universal(spec.params.n_samples, spec.params.seed);
    else if (id == "lz") s = lz_strategy();
    else if (id == "anticor") s = anticor_w(spec.params.w);
    else throw ArgumentError("unknown strategy id '" + id + "'");

    StrategyRun sr = run_strategy(*s, x, spec.gamma);
    return finish(std::move(sr.portfolios), std::move(sr.wealth));
}

namespace {

void add_baselines(SweepResult& sw, const MarketSequence& x, std::size_t points) {
    double market = run({"u-bah"}, x).wealth.final_wealth();
    double best = run({"best-stock"}, x).wealth.final_wealth();
    sw.series.emplace_back("market", std::vector<double>(points, market));
    sw.series.emplace_back("best-stock", std::vector<double>(points, best));
}

template <typename T, typename F>
std::vector<double> parallel_map(const std::vector<T>& axis, F&& body) {
    std::vector<std::future<double>> futures;
    futures.reserve(axis.size());
    for (const T& v : axis)
        futures.push_back(std::async(std::launch::async, body, v));
    std::vector<double> out;
    out.reserve(axis.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

template <typename T>
void check_axis(const std::vector<T>& axis) {
    if (axis.empty()) throw ArgumentError("sweep axis must be nonempty");
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (!(axis[i] > axis[i - 1]))
            throw ArgumentError("sweep axis must be strictly increasing");
}

}  // namespace

SweepResult sweep_window(const MarketSequence& x, const std::vector<std::size_t>& windows,
                         double gamma) {
    check_axis(windows);
    SweepResult sw;
    sw.axis_name = "w";
    for (std::size_t w : windows) sw.axis.push_back(static_cast<double>(w));
    sw.series.emplace_back("anticor", parallel_map(windows, [&](std::size_t w) {
                               RunSpec spec{"anticor", {}, gamma};
                               spec.params.w = w;
                               return run(spec, x).wealth.final_wealth();
                           }));
    add_baselines(sw, x, windows.size());
    return sw;
}

SweepResult sweep_max_window(const MarketSequence& x, const std::vector<std::size_t>& max_windows,
                             double gamma) {
    check_axis(max_windows);
    SweepResult sw;
    sw.axis_name = "W";
    for (std::size_t w : max_windows) sw.axis.push_back(static_cast<double>(w));
    sw.series.emplace_back("anti1", parallel_map(max_windows, [&](std::size_t mw) {
                               RunSpec spec{"anti1", {}, gamma};
                               spec.params.max_window = mw;
                               return run(spec, x).wealth.final_wealth();
                           }));
    add_baselines(sw, x, max_windows.size());
    return sw;
}

SweepResult sweep_commission(const MarketSequence& x, const std::vector<double>& gammas,
                             std::size_t max_window) {
    check_axis(gammas);
    // the commission-free family run is shared; only the cost charge varies
    FamilyRun fr = anti1(x, max_window);
    auto flat = flatten_bah(fr);

    SweepResult sw;
    sw.axis_name = "gamma";
    sw.axis = gammas;
    sw.series.emplace_back("anti1", parallel_map(gammas, [&](double g) {
                               return commission_return(flat, x, g).total;
                           }));
    add_baselines(sw, x, gammas.size());
    return sw;
}

}  // namespace anticor
