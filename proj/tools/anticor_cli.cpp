#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "anticor/backtest.hpp"
#include "anticor/errors.hpp"

namespace {

// Exit codes: 0 ok, 1 flag/usage error (CLI11), 2 invalid parameter,
// 3 unreadable input or output, 4 malformed or invalid data.
constexpr int kExitParameter = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;

anticor::MarketSequence read_market(const std::string& path, const std::string& format) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::ios_base::failure("cannot open input file '" + path + "'");
        in = &file;
    }
    if (format == "prices") return anticor::to_relatives(anticor::load_prices(*in));
    if (format == "relatives") return anticor::load_relatives(*in);
    throw anticor::ArgumentError("unknown input format '" + format + "' (expected prices or relatives)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open output file '" + path + "'");
    out << content;
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "relatives";
    std::string output = "-";
};

void add_io_options(CLI::App* cmd, CommonOpts& io, bool with_format = true) {
    cmd->add_option("--input,-i", io.input, "input CSV path, or - for stdin");
    if (with_format)
        cmd->add_option("--format", io.format, "input format: prices or relatives")
            ->check(CLI::IsMember({"prices", "relatives"}));
    cmd->add_option("--output,-o", io.output, "output path, or - for stdout");
}

std::vector<std::size_t> window_range(std::size_t lo, std::size_t hi) {
    if (lo < 2 || hi < lo) throw anticor::ArgumentError("window range must satisfy 2 <= min <= max");
    std::vector<std::size_t> r;
    for (std::size_t w = lo; w <= hi; ++w) r.push_back(w);
    return r;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Portfolio-selection backtester: mean-reversion trading over "
                 "relative-price sequences with classic online benchmarks"};
    app.require_subcommand(1);

    // synth cover-gluss
    auto* synth = app.add_subcommand("synth", "generate synthetic market sequences");
    synth->require_subcommand(1);
    auto* cg = synth->add_subcommand("cover-gluss", "alternating cash/stock no-growth market");
    std::size_t cg_days = 4;
    std::string cg_output = "-";
    cg->add_option("--days", cg_days, "number of days (even)")->required();
    cg->add_option("--output,-o", cg_output, "output path, or - for stdout");

    // convert
    auto* convert = app.add_subcommand("convert", "convert closing prices to relative prices");
    CommonOpts convert_io;
    convert_io.format = "prices";
    add_io_options(convert, convert_io, false);

    // reverse
    auto* reverse = app.add_subcommand("reverse", "reverse time order and invert relatives");
    CommonOpts reverse_io;
    add_io_options(reverse, reverse_io);

    // run
    auto* run_cmd = app.add_subcommand("run", "run one strategy over a market");
    CommonOpts run_io;
    add_io_options(run_cmd, run_io);
    anticor::RunSpec spec;
    std::string help_ids;
    for (const auto& [id, desc] : anticor::strategy_catalog())
        help_ids += (help_ids.empty() ? "" : ", ") + id;
    run_cmd->add_option("--strategy,-s", spec.strategy, "strategy id: " + help_ids)->required();
    run_cmd->add_option("--w", spec.params.w, "anticor window size (>= 2)");
    run_cmd->add_option("--max-w,-W", spec.params.max_window, "maximal window for anti1/anti2");
    run_cmd->add_option("--eta", spec.params.eta, "eg learning rate");
    run_cmd->add_option("--samples", spec.params.n_samples, "universal Monte Carlo sample count");
    run_cmd->add_option("--seed", spec.params.seed, "random seed (universal)");
    run_cmd->add_option("--tol", spec.params.tol, "cbal-star convergence tolerance");
    run_cmd->add_option("--gamma", spec.gamma, "proportional commission fraction in [0,1)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->require_subcommand(1);
    CommonOpts sweep_io;
    std::string sweep_format = "csv";
    std::size_t min_w = 2, max_w = 30;
    std::size_t sweep_family_w = 30;
    std::vector<double> gammas;
    auto* sw_window = sweep->add_subcommand("window", "anticor return vs window size");
    auto* sw_maxw = sweep->add_subcommand("maxwindow", "anti1 return vs maximal window");
    auto* sw_comm = sweep->add_subcommand("commission", "anti1 return vs commission rate");
    for (CLI::App* sc : {sw_window, sw_maxw, sw_comm}) {
        add_io_options(sc, sweep_io);
        sc->add_option("--report-format", sweep_format, "tsv, csv or svg-lines")
            ->check(CLI::IsMember({"tsv", "csv", "svg-lines"}));
    }
    sw_window->add_option("--min-w", min_w, "smallest window");
    sw_window->add_option("--max-w", max_w, "largest window");
    sw_maxw->add_option("--min-w", min_w, "smallest maximal window");
    sw_maxw->add_option("--max-w", max_w, "largest maximal window");
    sw_comm->add_option("--gammas", gammas, "commission rates (default 0.001..0.01)");
    sw_comm->add_option("--max-w,-W", sweep_family_w, "maximal window of the family");

    // table
    auto* table = app.add_subcommand("table", "multi-strategy comparison table");
    CommonOpts table_io;
    add_io_options(table, table_io);
    std::string table_format = "tsv";
    anticor::StrategyParams table_params;
    table->add_option("--report-format", table_format, "tsv or csv")
        ->check(CLI::IsMember({"tsv", "csv"}));
    table->add_option("--max-w,-W", table_params.max_window, "maximal window for anti1/anti2");
    table->add_option("--samples", table_params.n_samples, "universal sample count");
    table->add_option("--seed", table_params.seed, "random seed (universal)");
    table->add_option("--eta", table_params.eta, "eg learning rate");

    CLI11_PARSE(app, argc, argv);

    if (cg->parsed()) {
        std::ostringstream os;
        anticor::write_market_csv(os, anticor::cover_gluss(cg_days));
        write_output(cg_output, os.str());
        return 0;
    }
    if (convert->parsed()) {
        std::ostringstream os;
        anticor::write_market_csv(os, read_market(convert_io.input, "prices"));
        write_output(convert_io.output, os.str());
        return 0;
    }
    if (reverse->parsed()) {
        std::ostringstream os;
        anticor::write_market_csv(
            os, anticor::reverse_market(read_market(reverse_io.input, reverse_io.format)));
        write_output(reverse_io.output, os.str());
        return 0;
    }
    if (run_cmd->parsed()) {
        auto x = read_market(run_io.input, run_io.format);
        auto out = anticor::run(spec, x);
        std::ostringstream os;
        os << "# strategy=" << spec.strategy << " gamma=" << spec.gamma
           << " seed=" << spec.params.seed << " days=" << x.days()
           << " assets=" << x.assets() << "\n";
        os.precision(12);
        os << "final_wealth\t" << out.wealth.final_wealth() << "\n";
        os << "annualized_return\t" << out.report.annualized_return << "\n";
        os << "annualized_risk\t" << out.report.annualized_risk << "\n";
        os << "sharpe\t";
        if (out.report.sharpe_defined()) os << out.report.sharpe;
        else os << "n/a";
        os << "\n";
        write_output(run_io.output, os.str());
        return 0;
    }
    if (sweep->parsed()) {
        auto x = read_market(sweep_io.input, sweep_io.format);
        anticor::SweepResult result;
        if (sw_window->parsed()) {
            result = anticor::sweep_window(x, window_range(min_w, max_w));
        } else if (sw_maxw->parsed()) {
            result = anticor::sweep_max_window(x, window_range(min_w, max_w));
        } else {
            if (gammas.empty())
                for (int i = 1; i <= 10; ++i) gammas.push_back(i * 0.001);
            result = anticor::sweep_commission(x, gammas, sweep_family_w);
        }
        std::ostringstream os;
        anticor::emit_sweep(os, result, anticor::parse_report_format(sweep_format));
        write_output(sweep_io.output, os.str());
        return 0;
    }
    if (table->parsed()) {
        auto x = read_market(table_io.input, table_io.format);
        std::vector<anticor::TableRow> rows;
        for (const std::string& id :
             {"u-bah", "best-stock", "cbal-star", "u-cbal", "anti1", "anti2", "lz", "eg",
              "universal"}) {
            anticor::RunSpec rs{id, table_params, 0.0};
            rows.push_back({id, anticor::run(rs, x).report});
        }
        std::ostringstream os;
        os << "# seed=" << table_params.seed << " max_window=" << table_params.max_window
           << " samples=" << table_params.n_samples << " eta=" << table_params.eta << "\n";
        std::ostringstream body;
        anticor::emit_table(body, rows, anticor::parse_report_format(table_format));
        write_output(table_io.output, os.str() + body.str());
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const anticor::ArgumentError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const anticor::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kExitData;
    } catch (const anticor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitData;
    } catch (const anticor::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
