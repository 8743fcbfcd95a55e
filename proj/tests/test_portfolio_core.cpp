#include <doctest.h>

#include <cmath>
#include <random>
#include <span>

#include "anticor/errors.hpp"
#include "anticor/portfolio_core.hpp"
#include "helpers.hpp"

using namespace anticor;

TEST_CASE("portfolio construction validates and renormalizes") {
    Portfolio p({2.0, 2.0});
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(Portfolio({-0.1, 1.1}), ValidationError);
    CHECK_THROWS_AS(Portfolio({0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(Portfolio(std::vector<double>{}), DimensionError);
}

TEST_CASE("daily_return") {
    Portfolio half = Portfolio::uniform(2);
    std::vector<double> odd{1.0, 0.5}, even{1.0, 2.0}, ones{1.0, 1.0};
    CHECK(daily_return(half, odd) == doctest::Approx(0.75));
    CHECK(daily_return(half, even) == doctest::Approx(1.5));
    CHECK(daily_return(Portfolio({0.3, 0.7}), ones) == doctest::Approx(1.0));
    std::vector<double> three{1.0, 1.0, 1.0};
    CHECK_THROWS_AS(daily_return(half, three), DimensionError);
}

TEST_CASE("drift") {
    Portfolio half = Portfolio::uniform(2);
    std::vector<double> ones{1.0, 1.0}, skew{1.0, 3.0};
    auto d1 = drift(half, ones);
    CHECK(d1[0] == doctest::Approx(0.5));
    auto d2 = drift(half, skew);
    CHECK(d2[0] == doctest::Approx(0.25));
    CHECK(d2[1] == doctest::Approx(0.75));
    auto d3 = drift(Portfolio::single(2, 0), skew);
    CHECK(d3[0] == 1.0);
    CHECK(d3[1] == 0.0);
}

TEST_CASE("drift stays on the simplex for random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0), rel(0.1, 10.0);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t m = 2 + rng() % 6;
        std::vector<double> w(m), x(m);
        for (std::size_t j = 0; j < m; ++j) {
            w[j] = u(rng) + 1e-6;
            x[j] = rel(rng);
        }
        auto d = drift(Portfolio(w), x);
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            CHECK(d[j] >= 0.0);
            s += d[j];
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("total_return compounds daily returns") {
    SUBCASE("uniform rebalancing on the cash/stock example") {
        auto x = cover_gluss(10);
        std::vector<Portfolio> bs(10, Portfolio::uniform(2));
        auto rr = total_return(bs, x);
        CHECK(rr.total == doctest::Approx(std::pow(9.0 / 8.0, 5)).epsilon(1e-12));
        CHECK(rr.wealth.values.size() == 11);
        CHECK(rr.wealth.values[0] == 1.0);
    }
    SUBCASE("all-ones market returns 1") {
        auto x = testutil::from_rows({{1, 1}, {1, 1}});
        std::vector<Portfolio> bs{Portfolio({0.2, 0.8}), Portfolio({0.9, 0.1})};
        CHECK(total_return(bs, x).total == doctest::Approx(1.0));
    }
    SUBCASE("single day single asset") {
        auto x = testutil::from_rows({{2, 1}});
        CHECK(total_return({Portfolio::single(2, 0)}, x).total == doctest::Approx(2.0));
    }
    SUBCASE("length mismatch") {
        auto x = testutil::from_rows({{2, 1}});
        std::vector<Portfolio> bs(2, Portfolio::uniform(2));
        CHECK_THROWS_AS(total_return(bs, x), DimensionError);
    }
}

TEST_CASE("buy-and-hold return equals the dot with componentwise products") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        auto x = testutil::random_market(rng, 20, 3);
        std::vector<double> w{0.2, 0.5, 0.3};
        Portfolio b0(w);
        // run BAH by explicit drifting
        std::vector<Portfolio> bs;
        Portfolio b = b0;
        for (std::size_t t = 0; t < x.days(); ++t) {
            bs.push_back(b);
            b = drift(b, std::span(x.day(t), x.assets()));
        }
        double expect = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            double prod = 1.0;
            for (std::size_t t = 0; t < x.days(); ++t) prod *= x.relatives.at(t, j);
            expect += b0[j] * prod;
        }
        CHECK(total_return(bs, x).total == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("commission_return") {
    SUBCASE("gamma outside range") {
        auto x = cover_gluss(2);
        std::vector<Portfolio> bs(2, Portfolio::uniform(2));
        CHECK_THROWS_AS(commission_return(bs, x, 1.0), ArgumentError);
        CHECK_THROWS_AS(commission_return(bs, x, -0.1), ArgumentError);
    }
    SUBCASE("gamma=0 equals total_return bit-exactly") {
        std::mt19937_64 rng(9);
        for (int rep = 0; rep < 20; ++rep) {
            auto x = testutil::random_market(rng, 25, 4);
            std::vector<Portfolio> bs;
            std::uniform_real_distribution<double> u(0.01, 1.0);
            for (std::size_t t = 0; t < x.days(); ++t) {
                std::vector<double> w(4);
                for (double& v : w) v = u(rng);
                bs.emplace_back(std::move(w));
            }
            auto a = total_return(bs, x);
            auto b = commission_return(bs, x, 0.0);
            CHECK(a.total == b.total);
            for (std::size_t t = 0; t < a.wealth.values.size(); ++t)
                CHECK(a.wealth.values[t] == b.wealth.values[t]);
        }
    }
    SUBCASE("identical portfolios on an identity market pay only the first-day charge") {
        auto x = testutil::from_rows({{1, 1}, {1, 1}, {1, 1}});
        std::vector<Portfolio> bs(3, Portfolio({0.4, 0.6}));
        double g = 0.02;
        CHECK(commission_return(bs, x, g).total == doctest::Approx(1.0 - g / 2).epsilon(1e-14));
    }
    SUBCASE("uniform rebalancing on the 4-day cash/stock market, gamma=0.01") {
        // hand-expanded product:
        //   day 1: 3/4 * (1 - g/2 * 1)        (initial purchase from cash)
        //   day 2: 3/2 * (1 - g/2 * 1/3)      (drifted (2/3,1/3) -> (1/2,1/2))
        //   day 3: 3/4 * (1 - g/2 * 1/3)      (drifted (1/3,2/3) -> (1/2,1/2))
        //   day 4: 3/2 * (1 - g/2 * 1/3)
        double g = 0.01;
        double expect = (3.0 / 4) * (1 - g / 2) * (3.0 / 2) * (1 - g / 6) * (3.0 / 4) *
                        (1 - g / 6) * (3.0 / 2) * (1 - g / 6);
        CHECK(expect == doctest::Approx(1.2530108789355469).epsilon(1e-14));
        auto x = cover_gluss(4);
        std::vector<Portfolio> bs(4, Portfolio::uniform(2));
        CHECK(commission_return(bs, x, g).total == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("monotonically non-increasing in gamma") {
        std::mt19937_64 rng(13);
        auto x = testutil::random_market(rng, 30, 3);
        std::vector<Portfolio> bs;
        std::uniform_real_distribution<double> u(0.01, 1.0);
        for (std::size_t t = 0; t < x.days(); ++t) {
            std::vector<double> w(3);
            for (double& v : w) v = u(rng);
            bs.emplace_back(std::move(w));
        }
        double prev = commission_return(bs, x, 0.0).total;
        for (double g = 0.001; g < 0.2; g += 0.007) {
            double cur = commission_return(bs, x, g).total;
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("wealth series stays positive and starts at 1") {
    std::mt19937_64 rng(17);
    auto x = testutil::random_market(rng, 40, 4);
    std::vector<Portfolio> bs(40, Portfolio::uniform(4));
    auto rr = commission_return(bs, x, 0.005);
    CHECK(rr.wealth.values.front() == 1.0);
    for (double v : rr.wealth.values) CHECK(v > 0.0);
}
