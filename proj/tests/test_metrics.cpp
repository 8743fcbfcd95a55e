#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "anticor/errors.hpp"
#include "anticor/metrics.hpp"

using namespace anticor;

TEST_CASE("constant unit returns: flat report, undefined sharpe") {
    auto rep = annualize(std::vector<double>(30, 1.0));
    CHECK(rep.annualized_return == doctest::Approx(0.0));
    CHECK(rep.annualized_risk == 0.0);
    CHECK_FALSE(rep.sharpe_defined());
    CHECK(rep.total_return == doctest::Approx(1.0));
}

TEST_CASE("two-point alternating series") {
    // r = (1.1, 1/1.1) repeated: geometric mean 1, so zero annualized return;
    // sample stddev of n/2 copies each of a and b is sqrt(n/(n-1)) * (a-b)/2
    std::size_t n = 10;
    double a = 1.1, b = 1.0 / 1.1;
    std::vector<double> r;
    for (std::size_t i = 0; i < n / 2; ++i) {
        r.push_back(a);
        r.push_back(b);
    }
    auto rep = annualize(r);
    CHECK(rep.annualized_return == doctest::Approx(0.0).epsilon(1e-10));
    double expect_risk =
        std::sqrt(252.0 * static_cast<double>(n) / static_cast<double>(n - 1)) * (a - b) / 2.0;
    CHECK(rep.annualized_risk == doctest::Approx(expect_risk).epsilon(1e-12));
    CHECK(rep.sharpe == doctest::Approx((0.0 - 0.04) / expect_risk).epsilon(1e-10));
}

TEST_CASE("growth series annualizes with exponent 252/n") {
    std::vector<double> r(504, 1.001);
    auto rep = annualize(r);
    CHECK(rep.annualized_return == doctest::Approx(std::pow(1.001, 252) - 1).epsilon(1e-12));
    CHECK(rep.total_return == doctest::Approx(std::pow(1.001, 504)).epsilon(1e-12));
    CHECK(rep.annualized_risk == doctest::Approx(0.0));
}

TEST_CASE("symmetric statistics are permutation invariant") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::vector<double> r(60);
    for (double& v : r) v = u(rng);
    auto rep1 = annualize(r);
    std::shuffle(r.begin(), r.end(), rng);
    auto rep2 = annualize(r);
    CHECK(rep1.annualized_return == doctest::Approx(rep2.annualized_return).epsilon(1e-12));
    CHECK(rep1.annualized_risk == doctest::Approx(rep2.annualized_risk).epsilon(1e-12));
    CHECK(rep1.total_return == doctest::Approx(rep2.total_return).epsilon(1e-12));
}

TEST_CASE("total_return matches the plain product") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::vector<double> r(200);
    double prod = 1.0;
    for (double& v : r) {
        v = u(rng);
        prod *= v;
    }
    CHECK(annualize(r).total_return == doctest::Approx(prod).epsilon(1e-12));
}

TEST_CASE("configurable constants") {
    std::vector<double> r(10, 1.002);
    AnnualizationConfig cfg;
    cfg.trading_days_per_year = 365.0;
    cfg.risk_free_rate = 0.0;
    auto rep = annualize(r, cfg);
    CHECK(rep.annualized_return == doctest::Approx(std::pow(1.002, 365) - 1).epsilon(1e-12));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(annualize({1.0}), DimensionError);
    CHECK_THROWS_AS(annualize({1.0, -0.5}), ValidationError);
}
