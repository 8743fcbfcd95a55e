#include "anticor/market_data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "anticor/errors.hpp"

namespace anticor {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        auto b = field.find_first_not_of(" \t\r");
        auto e = field.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string()
                                             : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

bool iequals(const std::string& a, const char* b) {
    std::size_t i = 0;
    for (; i < a.size() && b[i]; ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return i == a.size() && b[i] == '\0';
}

struct RawTable {
    std::vector<std::string> names;
    Matrix values;
    std::vector<std::string> day_labels;
};

RawTable parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty input: expected a header row of asset names");

    auto header = split_csv_line(line);
    bool has_date_col = !header.empty() && iequals(header.front(), "date");
    std::size_t first_asset = has_date_col ? 1 : 0;

    RawTable table;
    table.names.assign(header.begin() + static_cast<long>(first_asset), header.end());
    std::size_t m = table.names.size();
    if (m < 2)
        throw DimensionError("need at least 2 assets, header has " + std::to_string(m));

    std::vector<double> cells;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++row_index;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError("row " + std::to_string(row_index) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        if (has_date_col) table.day_labels.push_back(fields[0]);
        for (std::size_t j = 0; j < m; ++j) {
            const std::string& f = fields[first_asset + j];
            double v;
            auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc() || p != f.data() + f.size())
                throw ValidationError("row " + std::to_string(row_index) + ", column " +
                                      std::to_string(j + 1) + ": non-numeric cell '" + f + "'");
            if (!(v > 0.0) || !std::isfinite(v))
                throw ValidationError("row " + std::to_string(row_index) + ", column " +
                                      std::to_string(j + 1) + ": value must be strictly positive, got '" + f + "'");
            cells.push_back(v);
        }
    }
    if (row_index == 0) throw ParseError("no data rows");

    table.values = Matrix(row_index, m);
    std::copy(cells.begin(), cells.end(), table.values.row(0));
    return table;
}

}  // namespace

MarketSequence MarketSequence::make(std::vector<std::string> names, Matrix relatives) {
    if (relatives.cols() < 2)
        throw DimensionError("market needs at least 2 assets");
    if (relatives.rows() < 1)
        throw DimensionError("market needs at least 1 day");
    if (names.size() != relatives.cols())
        throw DimensionError("asset label count does not match column count");
    for (double v : relatives.data())
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("relative prices must be strictly positive and finite");
    return MarketSequence{std::move(names), std::move(relatives)};
}

PriceSeries load_prices(std::istream& in) {
    RawTable t = parse_csv(in);
    return PriceSeries{std::move(t.names), std::move(t.values), std::move(t.day_labels)};
}

MarketSequence load_relatives(std::istream& in) {
    RawTable t = parse_csv(in);
    return MarketSequence::make(std::move(t.names), std::move(t.values));
}

MarketSequence to_relatives(const PriceSeries& p) {
    if (p.days() < 2)
        throw DimensionError("need at least 2 days of prices to form relatives");
    Matrix rel(p.days() - 1, p.assets());
    for (std::size_t t = 0; t + 1 < p.days(); ++t)
        for (std::size_t j = 0; j < p.assets(); ++j)
            rel.at(t, j) = p.prices.at(t + 1, j) / p.prices.at(t, j);
    return MarketSequence::make(p.names, std::move(rel));
}

MarketSequence reverse_market(const MarketSequence& x) {
    std::size_t n = x.days(), m = x.assets();
    Matrix rel(n, m);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t j = 0; j < m; ++j)
            rel.at(t, j) = 1.0 / x.relatives.at(n - 1 - t, j);
    return MarketSequence::make(x.names, std::move(rel));
}

MarketSequence cover_gluss(std::size_t n_days) {
    if (n_days == 0 || n_days % 2 != 0)
        throw ArgumentError("cover_gluss requires a positive even day count, got " +
                            std::to_string(n_days));
    Matrix rel(n_days, 2);
    for (std::size_t t = 0; t < n_days; ++t) {
        rel.at(t, 0) = 1.0;
        rel.at(t, 1) = (t % 2 == 0) ? 0.5 : 2.0;  // day t+1 odd -> 1/2
    }
    return MarketSequence::make({"CASH", "STOCK"}, std::move(rel));
}

void write_market_csv(std::ostream& out, const MarketSequence& x) {
    for (std::size_t j = 0; j < x.assets(); ++j)
        out << (j ? "," : "") << x.names[j];
    out << "\n";
    out.precision(17);
    for (std::size_t t = 0; t < x.days(); ++t) {
        for (std::size_t j = 0; j < x.assets(); ++j)
            out << (j ? "," : "") << x.relatives.at(t, j);
        out << "\n";
    }
}

}  // namespace anticor
