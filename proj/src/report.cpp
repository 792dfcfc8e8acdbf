#include "predictkit/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "predictkit/error.hpp"
#include "predictkit/regression.hpp"

namespace predictkit {
namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
}

std::string cell_label(const std::string& country, Asset asset) {
    return country + "/" + std::string(to_string(asset));
}

template <typename Fn>
void stage(CellResult& cell, const char* name, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        cell.errors.push_back(cell_label(cell.country, cell.asset) + " " + name + ": " + e.what());
    }
}

CellResult evaluate_cell(const ObservationPanel& panel, const RunConfig& config, const std::string& country,
                         Asset asset) {
    CellResult cell;
    cell.country = country;
    cell.asset = asset;

    bool derived = false;
    stage(cell, "derive", [&] {
        cell.series = derive_series(panel, config.columns, country, asset);
        derived = true;
    });
    if (!derived) return cell;
    const DerivedSeries& s = cell.series;

    stage(cell, "summary", [&] {
        if (!s.excess_return.empty()) cell.return_summary = summarize_series(values_of(s.excess_return));
        if (!is_portfolio(asset)) {
            cell.ratio_summaries.push_back(s.payout_price.empty()
                                               ? std::nullopt
                                               : std::optional(summarize_series(values_of(s.payout_price))));
        }
    });
    stage(cell, "in-sample", [&] { cell.in_sample = predictive_regression(s, config.lags); });
    if (asset == Asset::equity || asset == Asset::housing) {
        stage(cell, "payout-growth", [&] { cell.payout_growth = payout_growth_regression(s, config.lags); });
    }
    stage(cell, "forecast", [&] { cell.forecasts = expanding_forecasts(s.excess_return, s.ratios, config.min_train); });
    if (cell.forecasts) {
        stage(cell, "oos-r2", [&] { cell.oos_r2 = oos_r2(*cell.forecasts); });
        stage(cell, "clark-west", [&] {
            cell.clark_west = clark_west(*cell.forecasts, ClarkWestOptions{config.cw_hac, config.lags});
        });
        stage(cell, "economic", [&] {
            cell.economic = evaluate_economic_value(*cell.forecasts, s,
                                                    EconSettings{config.gamma, config.variance_window});
        });
    }
    return cell;
}

std::string opt_number(const std::optional<double>& v, int decimals = 6) {
    return v ? format_number(*v, decimals) : std::string{};
}

std::vector<std::string> selected_countries(const ObservationPanel& panel, const RunConfig& config) {
    return config.countries.empty() ? panel.countries() : config.countries;
}

const CellResult* find_cell(std::span<const CellResult> cells, const std::string& country, Asset asset) {
    for (const auto& c : cells) {
        if (c.country == country && c.asset == asset) return &c;
    }
    return nullptr;
}

std::vector<std::string> ordered_countries(std::span<const CellResult> cells) {
    std::vector<std::string> out;
    for (const auto& c : cells) {
        if (std::find(out.begin(), out.end(), c.country) == out.end()) out.push_back(c.country);
    }
    return out;
}

std::string display_name(Asset asset) {
    std::string name(to_string(asset));
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    return name;
}

Table regression_table(std::span<const CellResult> cells, Asset asset, bool growth) {
    Table t;
    const bool multi = is_portfolio(asset);
    t.header = {"country", "start", "end"};
    if (multi) {
        for (const char* r : {"cp", "dp", "rp"}) {
            t.header.push_back(std::string(r) + "_coeff");
            t.header.push_back(std::string(r) + "_nw_t");
        }
    } else {
        t.header.insert(t.header.end(), {"coeff", "nw_t"});
    }
    t.header.insert(t.header.end(), {"r2", "n_obs", "nw_lags"});

    for (const auto& cell : cells) {
        if (cell.asset != asset) continue;
        const auto& fit = growth ? cell.payout_growth : cell.in_sample;
        std::vector<std::string> row{cell.country};
        if (!fit) {
            row.resize(t.header.size());
            t.rows.push_back(std::move(row));
            continue;
        }
        row.push_back(std::to_string(fit->start_year));
        row.push_back(std::to_string(fit->end_year));
        for (Eigen::Index j = 0; j < fit->slopes.size(); ++j) {
            row.push_back(format_number(fit->slopes(j)));
            row.push_back(format_number(fit->hac_t(j)));
        }
        row.push_back(format_number(fit->r_squared));
        row.push_back(std::to_string(fit->n_obs));
        row.push_back(std::to_string(fit->nw_lags));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table oos_table(std::span<const CellResult> cells) {
    Table t;
    t.header = {"country"};
    for (Asset a : kAllAssets) {
        t.header.push_back(std::string(to_string(a)) + "_r2_oos");
        t.header.push_back(std::string(to_string(a)) + "_p_cw");
    }
    for (const auto& country : ordered_countries(cells)) {
        std::vector<std::string> row{country};
        for (Asset a : kAllAssets) {
            const CellResult* c = find_cell(cells, country, a);
            row.push_back(c ? opt_number(c->oos_r2) : "");
            row.push_back(c && c->clark_west ? format_number(c->clark_west->p_value) : "");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table economic_table(std::span<const CellResult> cells, Asset asset) {
    Table t;
    t.header = {"country", "null_sr", "alt_sr", "cer_gain", "cer_z", "turnover_alt_over_null", "turnover_null_over_alt",
                "n_years", "flags"};
    for (const auto& cell : cells) {
        if (cell.asset != asset) continue;
        std::vector<std::string> row{cell.country};
        if (!cell.economic) {
            row.resize(t.header.size());
            t.rows.push_back(std::move(row));
            continue;
        }
        const EconReport& e = *cell.economic;
        std::string flags;
        if (e.extreme) flags += "extreme-cer;";
        if (!e.null_sharpe || !e.alt_sharpe) flags += "degenerate-sharpe;";
        if (!e.flagged_years.empty()) flags += "skipped-years=" + std::to_string(e.flagged_years.size()) + ";";
        const double inverse = e.alt_turnover == 0.0
                                   ? (e.null_turnover == 0.0 ? 1.0 : std::numeric_limits<double>::infinity())
                                   : e.null_turnover / e.alt_turnover;
        row.insert(row.end(), {opt_number(e.null_sharpe), opt_number(e.alt_sharpe), format_number(e.cer_gain),
                               format_number(e.cer_z), format_number(e.relative_turnover), format_number(inverse),
                               std::to_string(e.n_years), flags});
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table summary_table(std::span<const SummaryCell> grid, bool blank) {
    Table t;
    t.header = {"country"};
    for (Asset a : kAllAssets) {
        for (const char* f : {"is", "oos", "cer"}) t.header.push_back(std::string(to_string(a)) + "_" + f);
    }
    for (Asset a : kAllAssets) t.header.push_back(std::string(to_string(a)) + "_gold");

    std::vector<std::string> countries;
    for (const auto& c : grid) {
        if (std::find(countries.begin(), countries.end(), c.country) == countries.end()) countries.push_back(c.country);
    }
    auto mark = [&](bool flag) { return flag ? std::string("Y") : (blank ? std::string{} : std::string("N")); };
    for (const auto& country : countries) {
        std::vector<std::string> row{country};
        std::vector<std::string> gold;
        for (Asset a : kAllAssets) {
            const auto it = std::find_if(grid.begin(), grid.end(),
                                         [&](const SummaryCell& c) { return c.country == country && c.asset == a; });
            if (it == grid.end()) {
                row.insert(row.end(), {"", "", ""});
                gold.emplace_back();
            } else if (it->failed) {
                row.insert(row.end(), {"*", "*", "*"});
                gold.emplace_back("*");
            } else {
                row.insert(row.end(), {mark(it->is_flag), mark(it->oos_flag), mark(it->cer_flag)});
                gold.push_back(mark(it->gold()));
            }
        }
        row.insert(row.end(), gold.begin(), gold.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

void add_summary_rows(Table& t, const std::string& country, const std::string& variable,
                      const std::optional<SeriesSummary>& s) {
    std::vector<std::string> row{country, variable};
    if (s) {
        for (double v : {s->mean, s->sd, s->min, s->q1, s->median, s->q3, s->max}) row.push_back(format_number(v));
        row.push_back(std::to_string(s->n));
    } else {
        row.resize(10);
    }
    t.rows.push_back(std::move(row));
}

Table summary_stats_table(std::span<const CellResult> cells, std::span<const Asset> assets) {
    Table t;
    t.header = {"country", "variable", "mean", "sd", "min", "q1", "median", "q3", "max", "n"};
    for (const auto& country : ordered_countries(cells)) {
        for (Asset a : assets) {
            const CellResult* c = find_cell(cells, country, a);
            if (!c) continue;
            add_summary_rows(t, country, display_name(a) + " Excess Return", c->return_summary);
            if (!is_portfolio(a)) {
                add_summary_rows(t, country, ratio_name(a),
                                 c->ratio_summaries.empty() ? std::nullopt : c->ratio_summaries.front());
            }
        }
    }
    return t;
}

nlohmann::json config_echo(const RunConfig& config) {
    nlohmann::json j;
    std::vector<std::string> files;
    for (const auto& f : config.data_files) files.push_back(f.string());
    j["data"] = files;
    j["release"] = config.release;
    j["countries"] = config.countries;
    std::vector<std::string> assets;
    for (Asset a : config.assets) assets.emplace_back(to_string(a));
    j["assets"] = assets;
    j["gamma"] = config.gamma;
    j["min_train"] = config.min_train;
    j["variance_window"] = config.variance_window;
    j["nw_lag_rule"] = config.lags.fixed >= 0 ? std::to_string(config.lags.fixed) : "floor(4*(n/100)^(2/9))";
    j["is_threshold"] = config.is_threshold;
    j["oos_alpha"] = config.oos_alpha;
    j["cer_z_threshold"] = config.cer_z_threshold ? nlohmann::json(*config.cer_z_threshold) : nlohmann::json("off");
    j["cw_hac"] = config.cw_hac;
    j["winsorize"] = config.columns.winsorize;
    j["sim_reps"] = config.sim_reps;
    j["sim_shocks"] = config.sim_shocks == ShockMode::gaussian ? "gaussian" : "bootstrap";
    j["sim_demean"] = config.sim_demean;
    j["format"] = config.format == OutputFormat::csv ? "csv" : "markdown";
    return j;
}

}  // namespace

std::string format_number(double value, int decimals) {
    if (std::isnan(value)) return "NaN";
    if (std::isinf(value)) return value > 0 ? "Inf" : "-Inf";
    if (std::abs(value) >= 1e9) return fmt::format("{:.{}e}", value, 3);
    return fmt::format("{:.{}f}", value, decimals);
}

SummaryCell classify(const ClassifierInput& input, const ClassifierRules& rules) {
    SummaryCell cell;
    cell.country = input.country;
    cell.asset = input.asset;
    cell.failed = input.hac_t.empty() || !input.oos_r2 || !input.cw_p || !input.cer_gain;
    cell.is_flag = std::any_of(input.hac_t.begin(), input.hac_t.end(),
                               [&](double t) { return std::abs(t) >= rules.is_threshold; });
    cell.oos_flag = input.oos_r2 && input.cw_p && *input.oos_r2 > 0.0 && *input.cw_p < rules.oos_alpha;
    cell.cer_flag = input.cer_gain && *input.cer_gain > 0.0;
    if (rules.cer_z_threshold) cell.cer_flag = cell.cer_flag && input.cer_z && *input.cer_z >= *rules.cer_z_threshold;
    return cell;
}

std::vector<SummaryCell> classify_summary(std::span<const ClassifierInput> inputs, const ClassifierRules& rules) {
    std::vector<SummaryCell> out;
    out.reserve(inputs.size());
    for (const auto& input : inputs) out.push_back(classify(input, rules));
    return out;
}

ClassifierInput classifier_input(const CellResult& cell) {
    ClassifierInput in;
    in.country = cell.country;
    in.asset = cell.asset;
    if (cell.in_sample) in.hac_t.assign(cell.in_sample->hac_t.begin(), cell.in_sample->hac_t.end());
    in.oos_r2 = cell.oos_r2;
    if (cell.clark_west) in.cw_p = cell.clark_west->p_value;
    if (cell.economic) {
        in.cer_gain = cell.economic->cer_gain;
        in.cer_z = cell.economic->cer_z;
    }
    return in;
}

std::vector<CellResult> evaluate_cells(const ObservationPanel& panel, const RunConfig& config) {
    std::vector<std::pair<std::string, Asset>> jobs;
    for (const auto& country : selected_countries(panel, config)) {
        for (Asset a : kAllAssets) {
            const auto wanted = config.assets_for(country);
            if (std::find(wanted.begin(), wanted.end(), a) != wanted.end()) jobs.emplace_back(country, a);
        }
    }
    std::vector<CellResult> cells(jobs.size());
    parallel_for(jobs.size(), config.workers,
                 [&](std::size_t i) { cells[i] = evaluate_cell(panel, config, jobs[i].first, jobs[i].second); });
    return cells;
}

FigureResult run_var_figure(std::span<const CellResult> cells, Asset market, const RunConfig& config) {
    if (market != Asset::equity && market != Asset::housing) {
        throw UnsupportedAssetError("VAR simulation is defined for equity and housing only");
    }
    if (!config.seed) throw ConfigError("a seed is required for simulation runs");
    std::vector<DerivedSeries> series;
    std::size_t contributing = 0;
    std::size_t total_rows = 0;
    for (const auto& c : cells) {
        if (c.asset != market) continue;
        const DerivedSeries* one = &c.series;
        const std::size_t rows = pooled_var_rows(std::span<const DerivedSeries>(one, 1), false).size();
        if (rows == 0) continue;
        ++contributing;
        total_rows += rows;
        series.push_back(c.series);
    }
    if (contributing == 0) throw SampleSizeError("no complete VAR rows for " + std::string(to_string(market)));

    FigureResult fig;
    fig.market = market;
    const std::vector<VarRow> rows = pooled_var_rows(series, config.sim_demean);
    fig.params = estimate_var_params(rows);

    SimSettings settings;
    settings.sample_length = config.sim_length.value_or(
        static_cast<int>(std::lround(static_cast<double>(total_rows) / static_cast<double>(contributing))));
    settings.sample_length = std::max(settings.sample_length, 30);
    settings.reps = config.sim_reps;
    settings.seed = *config.seed;
    settings.shocks = config.sim_shocks;
    settings.workers = config.workers;
    fig.outcome = simulate_null(fig.params, settings);
    return fig;
}

std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem, const Table& table,
                                  OutputFormat format) {
    std::filesystem::create_directories(dir);
    const auto path = dir / (stem + (format == OutputFormat::csv ? ".csv" : ".md"));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());

    auto csv_cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    auto write_row = [&](const std::vector<std::string>& row) {
        if (format == OutputFormat::csv) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        } else {
            out << "|";
            for (const auto& c : row) out << " " << c << " |";
        }
        out << "\n";
    };

    write_row(table.header);
    if (format == OutputFormat::markdown) {
        out << "|";
        for (std::size_t i = 0; i < table.header.size(); ++i) out << " --- |";
        out << "\n";
    }
    for (const auto& row : table.rows) write_row(row);
    return path;
}

RunReport run_pipeline(const RunConfig& config, PipelineMode mode) {
    const bool tables = mode != PipelineMode::sim;
    const bool sim = mode != PipelineMode::tables;
    config.validate(sim);

    const ObservationPanel panel = load_panel(config.data_files, config.columns, config.release);

    RunConfig effective = config;
    if (!tables) {
        // The simulation only needs the equity and housing series.
        effective.assets = {Asset::equity, Asset::housing};
        effective.country_assets.clear();
    }
    const std::vector<CellResult> cells = evaluate_cells(panel, effective);

    RunReport report;
    const auto& dir = config.out_dir;
    const auto fmt_ = config.format;
    auto emit = [&](const std::string& stem, const Table& t) { report.files.push_back(write_table(dir, stem, t, fmt_)); };

    if (tables) {
        for (const auto& c : cells) report.failed_cells.insert(report.failed_cells.end(), c.errors.begin(), c.errors.end());

        for (Asset a : kAllAssets) emit("table2_" + std::string(to_string(a)), regression_table(cells, a, false));
        emit("table3", oos_table(cells));
        for (Asset a : kAllAssets) emit("table4_" + std::string(to_string(a)), economic_table(cells, a));
        for (Asset a : {Asset::equity, Asset::housing}) {
            emit("table5_" + std::string(to_string(a)), regression_table(cells, a, true));
        }

        std::vector<ClassifierInput> inputs;
        for (const auto& c : cells) inputs.push_back(classifier_input(c));
        const ClassifierRules rules{config.is_threshold, config.oos_alpha, config.cer_z_threshold};
        emit("table1", summary_table(classify_summary(inputs, rules), config.table1_blank));

        for (Asset a : kSingleAssets) {
            const Asset one[] = {a};
            emit("tableA1_" + std::string(to_string(a)), summary_stats_table(cells, one));
        }
        const Asset portfolios[] = {Asset::risky, Asset::wealth};
        emit("tableA1_portfolios", summary_stats_table(cells, portfolios));
    }

    nlohmann::json sim_json = nlohmann::json::array();
    if (sim) {
        Table params;
        params.header = {"market", "rho", "phi", "b_d", "b_r", "phi0", "b_d0", "b_r0", "identity_residual",
                         "n_obs", "shock_var_dp", "shock_cov", "shock_var_d", "sample_length", "reps", "seed",
                         "p_br", "p_bd", "max_sim_identity_residual", "nonstationary_start"};
        for (Asset market : {Asset::equity, Asset::housing}) {
            try {
                const FigureResult fig = run_var_figure(cells, market, effective);
                const VarParams& p = fig.params;
                const SimOutcome& o = fig.outcome;
                params.rows.push_back({std::string(to_string(market)), format_number(p.rho), format_number(p.phi),
                                       format_number(p.b_d), format_number(p.b_r), format_number(o.null.phi),
                                       format_number(o.null.b_d), format_number(o.null.b_r),
                                       format_number(p.identity_residual()), std::to_string(p.n_obs),
                                       format_number(p.shock_cov(0, 0), 8), format_number(p.shock_cov(0, 1), 8),
                                       format_number(p.shock_cov(1, 1), 8), std::to_string(o.sample_length),
                                       std::to_string(o.reps), std::to_string(o.seed), format_number(o.p_br),
                                       format_number(o.p_bd), fmt::format("{:.3e}", o.max_identity_residual),
                                       o.nonstationary_start ? "true" : "false"});
                for (const auto& [suffix, samples] :
                     {std::pair{"br", &o.b_r_sim}, std::pair{"bd", &o.b_d_sim}, std::pair{"phi", &o.phi_sim}}) {
                    const Histogram h = histogram(std::span<const double>(samples->data(), samples->size()),
                                                  config.hist_bins);
                    Table ht;
                    ht.header = {"bin_lo", "bin_hi", "count"};
                    for (std::size_t i = 0; i < h.counts.size(); ++i) {
                        ht.rows.push_back({format_number(h.edges[i], 8), format_number(h.edges[i + 1], 8),
                                           std::to_string(h.counts[i])});
                    }
                    emit("fig1_hist_" + std::string(to_string(market)) + "_" + suffix, ht);
                }
                sim_json.push_back({{"market", to_string(market)}, {"sample_length", o.sample_length},
                                    {"reps", o.reps}, {"p_br", o.p_br}, {"p_bd", o.p_bd}});
            } catch (const Error& e) {
                report.failed_cells.push_back("fig1/" + std::string(to_string(market)) + ": " + e.what());
            }
        }
        emit("fig1_params", params);
    }

    nlohmann::json manifest;
    manifest["config"] = config_echo(config);
    manifest["release"] = panel.provenance.release;
    manifest["seed"] = config.seed ? nlohmann::json(*config.seed) : nlohmann::json(nullptr);
    manifest["mode"] = mode == PipelineMode::tables ? "tables" : (mode == PipelineMode::sim ? "sim" : "all");
    manifest["panel_records"] = panel.size();
    manifest["simulation"] = sim_json;
    manifest["failed_cells"] = report.failed_cells;
    std::vector<std::string> names;
    for (const auto& f : report.files) names.push_back(f.filename().string());
    manifest["files"] = names;

    std::filesystem::create_directories(dir);
    const auto manifest_path = dir / "manifest.json";
    std::ofstream(manifest_path, std::ios::binary) << manifest.dump(2) << "\n";
    report.files.push_back(manifest_path);
    return report;
}

}  // namespace predictkit
