// Copyright 2026 The flexcoal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment driver: simulate a demand-flexibility coalition bidding into an
// mFRR-style reserve market, quantify the aggregation synergy, and allocate
// the coalition profit with exact Shapley values.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flexcoal/assets.hpp"
#include "flexcoal/prices.hpp"
#include "flexcoal/settlement.hpp"
#include "flexcoal/shapley.hpp"
#include "flexcoal/sweep.hpp"
#include "flexcoal/synergy.hpp"

namespace fs = std::filesystem;
using namespace flexcoal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;

/// 12 significant digits, the serialization precision for all numeric output.
std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct RunConfig {
    std::string prices_path;
    std::string columns; // optional "day,hour,spot,balancing,mfrr" remap
    double price_scale = 1.0;
    int synthetic_days = 0; // > 0 selects the synthetic price source
    double synthetic_rate = 0.25;
    std::uint64_t synthetic_seed = 0;
    bool synthetic_seed_set = false;

    int n_assets = 1000;
    int n_demands = 5;
    std::vector<int> split;
    std::vector<int> always_fail;
    double penalty = 0.1;
    std::uint64_t seed = 42;
    int horizon = 0; // 0 = all days in the source
    std::string out_dir = ".";
    std::string format = "csv";
    int jobs = 1;
};

/// "a:b:step" or a comma list, as integers.
std::vector<int> parse_int_grid(const std::string& text) {
    std::vector<int> grid;
    if (text.find(':') != std::string::npos) {
        int a, b, step;
        if (std::sscanf(text.c_str(), "%d:%d:%d", &a, &b, &step) != 3 || step <= 0)
            throw CLI::ValidationError("--grid", "expected start:stop:step");
        for (int v = a; v <= b; v += step) grid.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) grid.push_back(std::stoi(tok));
    }
    return grid;
}

std::vector<double> parse_double_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double a, b, step;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0)
            throw CLI::ValidationError("--lambda-grid", "expected start:stop:step");
        for (double v = a; v <= b + 1e-12; v += step) grid.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
    }
    return grid;
}

PriceSeries load_config_prices(const RunConfig& cfg) {
    PriceSeries series;
    if (!cfg.prices_path.empty()) {
        std::ifstream in(cfg.prices_path);
        if (!in) throw Error("cannot open price file: " + cfg.prices_path);
        CsvSchema schema;
        if (!cfg.columns.empty()) {
            std::vector<std::string> names;
            std::stringstream ss(cfg.columns);
            std::string tok;
            while (std::getline(ss, tok, ',')) names.push_back(tok);
            if (names.size() != 5)
                throw Error("--columns needs 5 names: day,hour,spot,balancing,mfrr");
            schema = {names[0], names[1], names[2], names[3], names[4]};
        }
        series = load_prices(in, schema, cfg.price_scale);
    } else {
        const std::uint64_t seed =
            cfg.synthetic_seed_set ? cfg.synthetic_seed : cfg.seed;
        series = generate_synthetic_prices(seed, cfg.synthetic_days, cfg.synthetic_rate);
    }
    if (cfg.horizon > 0) {
        if (cfg.horizon > series.horizon())
            throw Error("--horizon " + std::to_string(cfg.horizon) +
                        " exceeds the " + std::to_string(series.horizon()) +
                        " days available");
        std::vector<PriceRecord> head(series.records().begin(),
                                      series.records().begin() + cfg.horizon * 24);
        series = PriceSeries(std::move(head));
    }
    return series;
}

AssetPopulation build_config_population(const RunConfig& cfg) {
    DemandSet fail;
    for (int d : cfg.always_fail) fail.add(d);
    std::optional<std::vector<int>> split;
    if (!cfg.split.empty()) split = cfg.split;
    return AssetPopulation::build(cfg.n_assets, cfg.n_demands, split, fail);
}

std::ofstream open_out(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    const fs::path path = fs::path(cfg.out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    return out;
}

std::string allocation_json(const Allocation& alloc) {
    std::ostringstream out;
    out << "{\n  \"mode\": \""
        << (alloc.mode == AllocationMode::exact ? "exact" : "sampled") << "\",\n"
        << "  \"grand_value\": " << fmt12(alloc.grand_value) << ",\n"
        << "  \"payments\": {";
    bool first = true;
    for (const auto& [d, phi] : alloc.payments) {
        out << (first ? "" : ", ") << '"' << d << "\": " << fmt12(phi);
        first = false;
    }
    out << "}";
    if (!alloc.std_errors.empty()) {
        out << ",\n  \"stderr\": {";
        first = true;
        for (const auto& [d, se] : alloc.std_errors) {
            out << (first ? "" : ", ") << '"' << d << "\": " << fmt12(se);
            first = false;
        }
        out << "}";
    }
    out << ",\n  \"subsets_evaluated\": " << alloc.subsets_evaluated << "\n}\n";
    return out.str();
}

int cmd_simulate(const RunConfig& cfg) {
    const PriceSeries prices = load_config_prices(cfg);
    const AssetPopulation pop = build_config_population(cfg);
    const DemandSet grand = DemandSet::all(cfg.n_demands);

    std::vector<DayTraceRow> trace;
    const HorizonResult result =
        settle_horizon(pop, grand, prices, PenaltyPrice(cfg.penalty), cfg.seed, &trace);

    auto tf = open_out(cfg, "trace.csv");
    tf << "day,subset_id,reservation,activation,penalty,total\n";
    for (const auto& row : trace)
        tf << row.day << ',' << grand.bits() << ',' << fmt12(row.profit.reservation)
           << ',' << fmt12(row.profit.activation) << ',' << fmt12(row.profit.penalty)
           << ',' << fmt12(row.profit.total()) << '\n';

    if (cfg.format == "json") {
        auto sf = open_out(cfg, "summary.json");
        sf << "{\n  \"days_settled\": " << trace.size()
           << ",\n  \"reservation\": " << fmt12(result.totals.reservation)
           << ",\n  \"activation\": " << fmt12(result.totals.activation)
           << ",\n  \"penalty\": " << fmt12(result.totals.penalty)
           << ",\n  \"total\": " << fmt12(result.totals.total())
           << ",\n  \"shortfall_kwh\": " << fmt12(result.shortfall_kwh) << "\n}\n";
    } else {
        auto sf = open_out(cfg, "summary.csv");
        sf << "days_settled,reservation,activation,penalty,total,shortfall_kwh\n";
        sf << trace.size() << ',' << fmt12(result.totals.reservation) << ','
           << fmt12(result.totals.activation) << ',' << fmt12(result.totals.penalty)
           << ',' << fmt12(result.totals.total()) << ',' << fmt12(result.shortfall_kwh)
           << '\n';
    }
    return kExitOk;
}

int cmd_synergy(const RunConfig& cfg, const std::string& grid_text, int window) {
    const PriceSeries prices = load_config_prices(cfg);
    const std::vector<int> grid = parse_int_grid(grid_text);
    const SynergyCurve curve =
        synergy_curve(grid, prices, PenaltyPrice(cfg.penalty), cfg.seed, window, cfg.jobs);

    auto out = open_out(cfg, "synergy.csv");
    out << "n_assets,coalition_profit,sum_individual,ratio,rolling_mean\n";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const SynergyPoint& p = curve.points[i];
        out << p.n_assets << ',' << fmt12(p.coalition_profit) << ','
            << fmt12(p.sum_individual_profit) << ','
            << (p.zero_denominator ? "zero_denominator" : fmt12(p.ratio)) << ','
            << fmt12(curve.rolling_mean[i]) << '\n';
    }
    return kExitOk;
}

int cmd_shapley(const RunConfig& cfg) {
    const PriceSeries prices = load_config_prices(cfg);
    const AssetPopulation pop = build_config_population(cfg);
    const CharacteristicTable table =
        characteristic_table(pop, prices, PenaltyPrice(cfg.penalty), cfg.seed, cfg.jobs);
    const Allocation alloc = exact_shapley(table);
    auto out = open_out(cfg, "shapley.json");
    out << allocation_json(alloc);
    return kExitOk;
}

int cmd_penalty_sweep(const RunConfig& cfg, const std::string& grid_text,
                      DemandId excluded, bool reprice_fast) {
    const PriceSeries prices = load_config_prices(cfg);
    const AssetPopulation pop = build_config_population(cfg);
    if (!pop.always_fail().contains(excluded))
        std::cerr << "warning: demand " << excluded
                  << " is not flagged always-fail; the sweep is most informative "
                     "with a failing excluded demand\n";

    const std::vector<double> grid =
        grid_text.empty() ? default_penalty_grid() : parse_double_grid(grid_text);
    const auto points =
        penalty_sweep(pop, prices, cfg.seed, grid, excluded, reprice_fast, cfg.jobs);

    auto out = open_out(cfg, "penalty_sweep.csv");
    out << "lambda_p,excluded_in_coalition,rest_in_coalition,rest_without_excluded,"
           "excluded_alone\n";
    for (const auto& p : points)
        out << fmt12(p.penalty) << ',' << fmt12(p.excluded_in_coalition) << ','
            << fmt12(p.rest_in_coalition) << ',' << fmt12(p.rest_without_excluded)
            << ',' << fmt12(p.excluded_alone) << '\n';
    return kExitOk;
}

int cmd_gen_prices(const RunConfig& cfg, int days, double rate,
                   const std::string& out_file) {
    const PriceSeries series = generate_synthetic_prices(cfg.seed, days, rate);
    if (out_file == "-") {
        save_prices(std::cout, series);
    } else {
        fs::path path(out_file);
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot open output file: " + out_file);
        save_prices(out, series);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flexcoal: reserve-market coalition simulator with Shapley payment allocation"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.set_config("--config", "", "Key-value config file; command-line flags win");
    app.add_option("--prices", cfg.prices_path, "Hourly price CSV (day,hour,spot,balancing,mfrr)");
    app.add_option("--columns", cfg.columns, "Column-name remap for --prices, 5 comma-separated names");
    app.add_option("--price-scale", cfg.price_scale, "Multiplier applied to ingested prices (0.001 for DKK/MWh data)");
    app.add_option("--synthetic-days", cfg.synthetic_days, "Generate synthetic prices for N days instead of reading a file");
    app.add_option("--synthetic-rate", cfg.synthetic_rate, "Target activation frequency of the synthetic series")
        ->check(CLI::Range(0.0, 1.0));
    auto* synth_seed = app.add_option("--synthetic-seed", cfg.synthetic_seed,
                                      "Seed for the synthetic prices (defaults to --seed)");
    app.add_option("--assets", cfg.n_assets, "Total number of 1-kW assets");
    app.add_option("--demands", cfg.n_demands, "Number of flexible demands");
    app.add_option("--split", cfg.split, "Per-demand asset counts (default: uniform)")->delimiter(',');
    app.add_option("--always-fail", cfg.always_fail, "Demand ids whose assets never deliver")->delimiter(',');
    app.add_option("--penalty", cfg.penalty, "Penalty price, DKK per kWh of shortfall")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "Master seed for all consumption draws");
    app.add_option("--horizon", cfg.horizon, "Use only the first N days of the price source");
    app.add_option("--out", cfg.out_dir, "Output directory");
    app.add_option("--format", cfg.format, "Summary format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", cfg.jobs, "Parallel workers for subset/grid evaluation")
        ->check(CLI::PositiveNumber);

    auto* simulate = app.add_subcommand("simulate", "Settle the grand coalition over the horizon");

    auto* synergy = app.add_subcommand("synergy", "Profit ratio of coalition vs stand-alone assets over a size grid");
    std::string synergy_grid = "10:1000:10";
    int window = 40;
    synergy->add_option("--grid", synergy_grid, "Asset-count grid, start:stop:step or comma list");
    synergy->add_option("--window", window, "Rolling-mean window")->check(CLI::PositiveNumber);

    auto* shapley = app.add_subcommand("shapley", "Exact Shapley payment allocation for the configured demands");

    auto* sweep = app.add_subcommand("penalty-sweep", "Shapley payments across a penalty-price grid");
    std::string lambda_grid;
    int excluded = 1;
    bool reprice_fast = false;
    sweep->add_option("--lambda-grid", lambda_grid, "Penalty grid, start:stop:step or comma list (default 0:3:0.25)");
    sweep->add_option("--exclude", excluded, "Demand whose membership is compared")->check(CLI::PositiveNumber);
    sweep->add_flag("--reprice-fast", reprice_fast, "Settle subsets once and re-price only the penalty term");

    auto* gen = app.add_subcommand("gen-prices", "Write a synthetic price CSV");
    int gen_days = 30;
    double gen_rate = 0.25;
    std::string gen_out = "prices.csv";
    gen->add_option("--days", gen_days, "Days to generate")->check(CLI::PositiveNumber);
    gen->add_option("--rate", gen_rate, "Target activation frequency")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--out-file", gen_out, "Output path, or - for stdout");

    // global options may appear after the subcommand name
    for (CLI::App* sub : {simulate, synergy, shapley, sweep, gen})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }
    cfg.synthetic_seed_set = synth_seed->count() > 0;

    if (!gen->parsed() && cfg.prices_path.empty() == (cfg.synthetic_days <= 0)) {
        std::cerr << "error: exactly one price source required: --prices PATH or "
                     "--synthetic-days N\n";
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (synergy->parsed()) return cmd_synergy(cfg, synergy_grid, window);
        if (shapley->parsed()) return cmd_shapley(cfg);
        if (sweep->parsed()) return cmd_penalty_sweep(cfg, lambda_grid, excluded, reprice_fast);
        if (gen->parsed()) return cmd_gen_prices(cfg, gen_days, gen_rate, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitConfig;
}
