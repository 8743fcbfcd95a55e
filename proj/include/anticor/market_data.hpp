#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace anticor {

// Dense row-major matrix of doubles. Rows are trading days, columns assets.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const double* row(std::size_t r) const { return data_.data() + r * cols_; }
    double* row(std::size_t r) { return data_.data() + r * cols_; }

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Daily closing prices, one row per day, oldest first. All entries > 0.
struct PriceSeries {
    std::vector<std::string> names;
    Matrix prices;
    std::vector<std::string> day_labels;  // optional, empty when absent

    std::size_t days() const { return prices.rows(); }
    std::size_t assets() const { return prices.cols(); }
};

// Relative prices x_t(j) = v_t(j) / v_{t-1}(j). All entries > 0 and finite.
struct MarketSequence {
    std::vector<std::string> names;
    Matrix relatives;

    std::size_t days() const { return relatives.rows(); }
    std::size_t assets() const { return relatives.cols(); }

    const double* day(std::size_t t) const { return relatives.row(t); }

    // Validates positivity/finiteness and minimum dimensions (m >= 2, n >= 1).
    static MarketSequence make(std::vector<std::string> names, Matrix relatives);
};

enum class InputFormat { Prices, Relatives };

// CSV with a header row of asset names and one data row per day, oldest
// first. An optional first column named "date" (case-insensitive) is kept
// as day labels.
PriceSeries load_prices(std::istream& in);
MarketSequence load_relatives(std::istream& in);

MarketSequence to_relatives(const PriceSeries& p);

// Reverses time order and inverts every relative price.
MarketSequence reverse_market(const MarketSequence& x);

// Two-asset cash/stock market alternating (1, 1/2), (1, 2). n_days must be even.
MarketSequence cover_gluss(std::size_t n_days);

void write_market_csv(std::ostream& out, const MarketSequence& x);

}  // namespace anticor
