#include "anticor/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <span>

#include "anticor/anticor.hpp"
#include "anticor/errors.hpp"

namespace anticor {

namespace {

std::span<const double> last_day(const MarketSequence& history, std::size_t days) {
    return {history.day(days - 1), history.assets()};
}

class BahStrategy final : public Strategy {
public:
    explicit BahStrategy(Portfolio b, std::string label)
        : initial_(std::move(b)), label_(std::move(label)) {}
    BahStrategy(std::string label) : label_(std::move(label)) {}  // uniform at reset

    std::string name() const override { return label_; }

    void reset(std::size_t m) override {
        if (!initial_ && label_ == "u-bah") current_.emplace(Portfolio::uniform(m));
        else current_ = initial_;
        if (current_->size() != m)
            throw DimensionError("buy-and-hold portfolio has wrong asset count");
    }

    Portfolio next(const MarketSequence&, std::size_t days, const Portfolio& holdings) override {
        return days == 0 ? *current_ : holdings;  // never rebalance
    }

private:
    std::optional<Portfolio> initial_;
    std::optional<Portfolio> current_;
    std::string label_;
};

class CbalStrategy final : public Strategy {
public:
    explicit CbalStrategy(Portfolio b, std::string label)
        : target_(std::move(b)), label_(std::move(label)) {}
    explicit CbalStrategy(std::string label) : label_(std::move(label)) {}

    std::string name() const override { return label_; }

    void reset(std::size_t m) override {
        if (!target_ || label_ == "u-cbal") target_.emplace(Portfolio::uniform(m));
        if (target_->size() != m)
            throw DimensionError("rebalancing portfolio has wrong asset count");
    }

    Portfolio next(const MarketSequence&, std::size_t, const Portfolio&) override {
        return *target_;
    }

private:
    std::optional<Portfolio> target_;
    std::string label_;
};

class EgStrategy final : public Strategy {
public:
    explicit EgStrategy(double eta) : eta_(eta) {
        if (!(eta >= 0.0)) throw ArgumentError("eg learning rate must be nonnegative");
    }

    std::string name() const override { return "eg(" + std::to_string(eta_) + ")"; }

    void reset(std::size_t m) override {
        weights_.assign(m, 1.0 / static_cast<double>(m));
        previous_.reset();
    }

    Portfolio next(const MarketSequence& history, std::size_t days, const Portfolio&) override {
        if (days > 0) {
            auto x = last_day(history, days);
            double r = daily_return(*previous_, x);
            for (std::size_t j = 0; j < weights_.size(); ++j)
                weights_[j] = (*previous_)[j] * std::exp(eta_ * x[j] / r);
            double s = 0.0;
            for (double v : weights_) s += v;
            // keep the raw weights scale-free; rescaling is a no-op for the
            // emitted (normalized) portfolios
            if (s < 0.25 || s > 4.0)
                for (double& v : weights_) v /= s;
        }
        previous_.emplace(Portfolio(weights_));
        return *previous_;
    }

private:
    double eta_;
    std::vector<double> weights_;
    std::optional<Portfolio> previous_;
};

class UniversalStrategy final : public Strategy {
public:
    UniversalStrategy(std::size_t n_samples, std::uint64_t seed)
        : n_samples_(n_samples), seed_(seed) {
        if (n_samples == 0) throw ArgumentError("universal needs at least one sample");
    }

    std::string name() const override { return "universal"; }

    void reset(std::size_t m) override {
        samples_.clear();
        samples_.reserve(n_samples_);
        std::mt19937_64 rng(seed_);
        std::gamma_distribution<double> gamma(0.5, 1.0);
        while (samples_.size() < n_samples_) {
            std::vector<double> w(m);
            double s = 0.0;
            for (double& v : w) {
                v = gamma(rng);
                s += v;
            }
            if (s > 0.0) samples_.emplace_back(std::move(w));
        }
        wealths_.assign(n_samples_, 1.0);
    }

    Portfolio next(const MarketSequence& history, std::size_t days, const Portfolio&) override {
        std::size_t m = history.assets();
        if (days > 0) {
            auto x = last_day(history, days);
            double max_w = 0.0;
            for (std::size_t k = 0; k < samples_.size(); ++k) {
                wealths_[k] *= daily_return(samples_[k], x);
                max_w = std::max(max_w, wealths_[k]);
            }
            // common rescale: ratios are all that matter
            if (max_w > 1e200 || max_w < 1e-200)
                for (double& v : wealths_) v /= max_w;
        }
        std::vector<long double> acc(m, 0.0L);
        for (std::size_t k = 0; k < samples_.size(); ++k)
            for (std::size_t j = 0; j < m; ++j)
                acc[j] += static_cast<long double>(wealths_[k]) * samples_[k][j];
        std::vector<double> w(m);
        for (std::size_t j = 0; j < m; ++j) w[j] = static_cast<double>(acc[j]);
        return Portfolio(std::move(w));
    }

    const std::vector<Portfolio>& samples() const { return samples_; }
    const std::vector<double>& sample_wealths() const { return wealths_; }

private:
    std::size_t n_samples_;
    std::uint64_t seed_;
    std::vector<Portfolio> samples_;
    std::vector<double> wealths_;
};

class LzStrategy final : public Strategy {
public:
    std::string name() const override { return "lz"; }

    void reset(std::size_t m) override {
        m_ = m;
        nodes_.assign(1, Node{});
        context_ = 0;
    }

    Portfolio next(const MarketSequence& history, std::size_t days, const Portfolio&) override {
        if (days > 0) observe(winner(last_day(history, days)));
        const Node& ctx = nodes_[context_];
        std::vector<double> p(m_);
        double total = 0.0;
        for (auto [sym, child] : ctx.children) total += static_cast<double>(nodes_[child].count);
        for (std::size_t j = 0; j < m_; ++j) {
            auto it = ctx.children.find(j);
            double c = it == ctx.children.end() ? 0.0 : static_cast<double>(nodes_[it->second].count);
            p[j] = (c + 1.0) / (total + static_cast<double>(m_));
        }
        return Portfolio(std::move(p));
    }

private:
    struct Node {
        std::map<std::size_t, std::size_t> children;  // symbol -> node index
        std::size_t count = 0;
    };

    static std::size_t winner(std::span<const double> x) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < x.size(); ++j)
            if (x[j] > x[best]) best = j;
        return best;
    }

    void observe(std::size_t symbol) {
        nodes_[0].count++;  // root counts parsed symbols
        auto it = nodes_[context_].children.find(symbol);
        if (it != nodes_[context_].children.end()) {
            context_ = it->second;
            nodes_[context_].count++;
        } else {
            nodes_.push_back(Node{{}, 1});
            nodes_[context_].children.emplace(symbol, nodes_.size() - 1);
            context_ = 0;  // phrase complete
        }
    }

    std::size_t m_ = 0;
    std::vector<Node> nodes_;
    std::size_t context_ = 0;
};

class AnticorStrategy final : public Strategy {
public:
    explicit AnticorStrategy(std::size_t w) : w_(w) {
        if (w < 2) throw ArgumentError("window size must be at least 2");
    }

    std::string name() const override { return "anticor(w=" + std::to_string(w_) + ")"; }

    void reset(std::size_t) override {}

    Portfolio next(const MarketSequence& history, std::size_t days,
                   const Portfolio& holdings) override {
        return anticor_step(w_, days, history, holdings);
    }

private:
    std::size_t w_;
};

}  // namespace

StrategyPtr bah(Portfolio b) { return std::make_unique<BahStrategy>(std::move(b), "bah"); }
StrategyPtr u_bah() { return std::make_unique<BahStrategy>("u-bah"); }
StrategyPtr cbal(Portfolio b) { return std::make_unique<CbalStrategy>(std::move(b), "cbal"); }
StrategyPtr u_cbal() { return std::make_unique<CbalStrategy>("u-cbal"); }
StrategyPtr eg(double eta) { return std::make_unique<EgStrategy>(eta); }
StrategyPtr universal(std::size_t n_samples, std::uint64_t seed) {
    return std::make_unique<UniversalStrategy>(n_samples, seed);
}
StrategyPtr lz_strategy() { return std::make_unique<LzStrategy>(); }
StrategyPtr anticor_w(std::size_t w) { return std::make_unique<AnticorStrategy>(w); }

Portfolio best_stock_hindsight(const MarketSequence& x) {
    std::size_t best = 0;
    double best_log = -1e300;
    for (std::size_t j = 0; j < x.assets(); ++j) {
        double lw = 0.0;
        for (std::size_t t = 0; t < x.days(); ++t) lw += std::log(x.relatives.at(t, j));
        if (lw > best_log) {
            best_log = lw;
            best = j;
        }
    }
    return Portfolio::single(x.assets(), best);
}

namespace {

double log_wealth(const std::vector<double>& b, const MarketSequence& x) {
    double f = 0.0;
    for (std::size_t t = 0; t < x.days(); ++t) {
        double r = 0.0;
        for (std::size_t j = 0; j < x.assets(); ++j) r += b[j] * x.relatives.at(t, j);
        f += std::log(r);
    }
    return f;
}

// One multiplicative step b'(j) ∝ b(j) * g(j)^alpha, where g is the mean
// growth gradient. alpha = 1 is the classic monotone update; larger alpha
// stretches the same direction.
std::vector<double> stretched(const std::vector<double>& b, const std::vector<double>& g,
                              double alpha) {
    std::vector<double> c(b.size());
    double s = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        c[j] = b[j] * std::exp(alpha * std::log(g[j]));
        s += c[j];
    }
    for (double& v : c) v /= s;
    return c;
}

// Multiplicative ascent with step doubling along the update direction. The
// alpha = 1 step never decreases the objective, so keeping the best candidate
// preserves monotonicity while boundary optima are reached far faster.
// Returns (iterations used, converged by the tolerance test).
std::pair<std::size_t, bool> ascend(std::vector<double>& b, const MarketSequence& x,
                                    double tol, std::size_t max_iter, double& obj) {
    std::size_t n = x.days(), m = x.assets();
    obj = log_wealth(b, x);
    for (std::size_t it = 1; it <= max_iter; ++it) {
        std::vector<double> g(m, 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            double r = 0.0;
            const double* row = x.day(t);
            for (std::size_t j = 0; j < m; ++j) r += b[j] * row[j];
            for (std::size_t j = 0; j < m; ++j) g[j] += row[j] / r;
        }
        for (double& v : g) v /= static_cast<double>(n);

        auto best = stretched(b, g, 1.0);
        double best_obj = log_wealth(best, x);
        for (double alpha = 2.0; alpha <= 1024.0; alpha *= 2.0) {
            auto cand = stretched(b, g, alpha);
            double cand_obj = log_wealth(cand, x);
            if (cand_obj <= best_obj) break;
            best = std::move(cand);
            best_obj = cand_obj;
        }
        if (best_obj - obj < tol) {
            if (best_obj > obj) {
                b = std::move(best);
                obj = best_obj;
            }
            return {it, true};
        }
        b = std::move(best);
        obj = best_obj;
    }
    return {max_iter, false};
}

}  // namespace

CbalStarResult cbal_star(const MarketSequence& x, double tol, std::size_t max_iterations) {
    std::size_t m = x.assets();
    std::vector<double> best_b(m, 1.0 / static_cast<double>(m));
    double best_obj;
    auto [used, converged] = ascend(best_b, x, tol, max_iterations, best_obj);

    // Boundary optima converge slowly from the interior; restart near any
    // vertex that still dominates, and never return less than a vertex.
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<double> vertex(m, 0.0);
        vertex[j] = 1.0;
        double vobj = log_wealth(vertex, x);
        if (vobj > best_obj) {
            std::vector<double> b(m, 1e-3 / static_cast<double>(m - 1));
            b[j] = 1.0 - 1e-3;
            double obj;
            auto [it, ok] = ascend(b, x, tol, max_iterations, obj);
            used += it;
            if (obj > vobj) {
                best_obj = obj;
                best_b = std::move(b);
                converged = ok;
            } else {
                best_obj = vobj;
                best_b = std::move(vertex);
                converged = true;
            }
        }
    }

    if (!converged)
        throw std::runtime_error("cbal_star: no convergence within iteration cap; best value " +
                                 std::to_string(std::exp(best_obj)));
    return {Portfolio(std::move(best_b)), std::exp(best_obj), used, converged};
}

const std::map<std::string, std::string>& strategy_catalog() {
    static const std::map<std::string, std::string> catalog = {
        {"u-bah", "uniform buy-and-hold (the market)"},
        {"best-stock", "hindsight best single stock"},
        {"u-cbal", "uniform constant-rebalanced portfolio"},
        {"cbal-star", "hindsight-optimal constant-rebalanced portfolio"},
        {"eg", "exponentiated gradient (--eta, default 0.01)"},
        {"universal", "universal portfolio, Dirichlet(1/2) Monte Carlo (--samples, --seed)"},
        {"lz", "LZ78 winner-prediction portfolio"},
        {"anticor", "single-window mean-reversion rule (--w, default 2)"},
        {"anti1", "uniform buy-and-hold over anticor windows 2..W (--max-w, default 30)"},
        {"anti2", "anticor-over-anticor compounding, then buy-and-hold (--max-w, default 30)"},
    };
    return catalog;
}

}  // namespace anticor
