#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "anticor/backtest.hpp"
#include "anticor/errors.hpp"

namespace anticor {

namespace {

// Truncation toward zero, per the table convention.
std::string truncated(double v, int decimals = 2) {
    double scale = std::pow(10.0, decimals);
    double t = std::trunc(v * scale) / scale;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, t);
    return buf;
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
    if (name == "tsv") return ReportFormat::Tsv;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "svg-lines") return ReportFormat::SvgLines;
    throw ArgumentError("unknown report format '" + name + "' (expected tsv, csv or svg-lines)");
}

void emit_table(std::ostream& out, const std::vector<TableRow>& rows, ReportFormat format) {
    if (format == ReportFormat::SvgLines)
        throw ArgumentError("table output supports tsv or csv only");
    const char sep = format == ReportFormat::Tsv ? '\t' : ',';
    out << "strategy" << sep << "total_return" << sep << "ann_return_pct" << sep
        << "ann_risk_pct" << sep << "sharpe_pct" << sep << "n_days" << "\n";
    for (const auto& row : rows) {
        out << row.name << sep << truncated(row.perf.total_return) << sep
            << truncated(100.0 * row.perf.annualized_return) << sep
            << truncated(100.0 * row.perf.annualized_risk) << sep
            << (row.perf.sharpe_defined() ? truncated(100.0 * row.perf.sharpe) : std::string("n/a"))
            << sep << row.perf.n_days << "\n";
    }
}

namespace {

void emit_sweep_delimited(std::ostream& out, const SweepResult& sweep, char sep) {
    out << sweep.axis_name;
    for (const auto& [name, values] : sweep.series) out << sep << name;
    out << "\n";
    for (std::size_t i = 0; i < sweep.axis.size(); ++i) {
        out << full(sweep.axis[i]);
        for (const auto& [name, values] : sweep.series) out << sep << full(values[i]);
        out << "\n";
    }
}

void emit_sweep_svg(std::ostream& out, const SweepResult& sweep) {
    constexpr double width = 800, height = 500, pad = 60;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

    double x_lo = sweep.axis.front(), x_hi = sweep.axis.back();
    double y_lo = 1e300, y_hi = -1e300;
    for (const auto& [name, values] : sweep.series)
        for (double v : values) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    if (x_hi == x_lo) x_hi = x_lo + 1;
    if (y_hi == y_lo) y_hi = y_lo + 1;

    auto sx = [&](double x) { return pad + (x - x_lo) / (x_hi - x_lo) * (width - 2 * pad); };
    auto sy = [&](double y) { return height - pad - (y - y_lo) / (y_hi - y_lo) * (height - 2 * pad); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << full(pad) << "\" y1=\"" << full(height - pad) << "\" x2=\""
        << full(width - pad) << "\" y2=\"" << full(height - pad)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << full(pad) << "\" y1=\"" << full(pad) << "\" x2=\"" << full(pad)
        << "\" y2=\"" << full(height - pad) << "\" stroke=\"black\"/>\n";
    std::size_t ci = 0;
    for (const auto& [name, values] : sweep.series) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 5] << "\" points=\"";
        for (std::size_t i = 0; i < sweep.axis.size(); ++i)
            out << (i ? " " : "") << full(sx(sweep.axis[i])) << "," << full(sy(values[i]));
        out << "\"/>\n";
        out << "<text x=\"" << full(width - pad + 4) << "\" y=\""
            << full(sy(values.back())) << "\" font-size=\"11\" fill=\"" << colors[ci % 5]
            << "\">" << name << "</text>\n";
        ++ci;
    }
    out << "<text x=\"" << full(width / 2) << "\" y=\"" << full(height - pad / 3)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << sweep.axis_name << "</text>\n";
    out << "</svg>\n";
}

}  // namespace

void emit_sweep(std::ostream& out, const SweepResult& sweep, ReportFormat format) {
    switch (format) {
        case ReportFormat::Tsv: emit_sweep_delimited(out, sweep, '\t'); break;
        case ReportFormat::Csv: emit_sweep_delimited(out, sweep, ','); break;
        case ReportFormat::SvgLines: emit_sweep_svg(out, sweep); break;
    }
}

}  // namespace anticor
