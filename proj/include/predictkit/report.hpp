#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "predictkit/config.hpp"
#include "predictkit/derive.hpp"
#include "predictkit/forecast.hpp"
#include "predictkit/ols.hpp"
#include "predictkit/panel.hpp"
#include "predictkit/portfolio.hpp"
#include "predictkit/transforms.hpp"
#include "predictkit/var_sim.hpp"

namespace predictkit {

/// Every upstream result for one (country, asset) cell. Failed stages leave their
/// optional empty and add a message to `errors`.
struct CellResult {
    std::string country;
    Asset asset = Asset::equity;
    DerivedSeries series;
    std::optional<RegressionFit<double>> in_sample;
    std::optional<RegressionFit<double>> payout_growth;
    std::optional<ForecastSet> forecasts;
    std::optional<double> oos_r2;
    std::optional<ClarkWestResult> clark_west;
    std::optional<EconReport> economic;
    std::optional<SeriesSummary> return_summary;
    std::vector<std::optional<SeriesSummary>> ratio_summaries;
    std::vector<std::string> errors;

    bool failed() const { return !errors.empty(); }
};

/// Classifier input, decoupled from the numeric pipeline so published numbers can be fed
/// in directly.
struct ClassifierInput {
    std::string country;
    Asset asset = Asset::equity;
    std::vector<double> hac_t;
    std::optional<double> oos_r2;
    std::optional<double> cw_p;
    std::optional<double> cer_gain;
    std::optional<double> cer_z;
};

struct ClassifierRules {
    double is_threshold = 1.645;
    double oos_alpha = 0.05;
    std::optional<double> cer_z_threshold;
};

struct SummaryCell {
    std::string country;
    Asset asset = Asset::equity;
    bool is_flag = false;
    bool oos_flag = false;
    bool cer_flag = false;
    bool failed = false;  // some input missing; rendered blank with a marker

    bool gold() const { return is_flag && oos_flag; }
};

SummaryCell classify(const ClassifierInput& input, const ClassifierRules& rules = {});
std::vector<SummaryCell> classify_summary(std::span<const ClassifierInput> inputs,
                                          const ClassifierRules& rules = {});
ClassifierInput classifier_input(const CellResult& cell);

/// Runs derivation, regressions, forecasts, and backtests for every configured cell.
/// Cells are evaluated concurrently and returned ordered by (country, asset).
std::vector<CellResult> evaluate_cells(const ObservationPanel& panel, const RunConfig& config);

struct FigureResult {
    Asset market = Asset::equity;
    VarParams params;
    SimOutcome outcome;
};

/// Pools the cells of `market`, estimates the VAR, and simulates the null.
FigureResult run_var_figure(std::span<const CellResult> cells, Asset market, const RunConfig& config);

enum class PipelineMode { tables, sim, all };

struct RunReport {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> failed_cells;

    bool partial() const { return !failed_cells.empty(); }
};

/// Loads the data, evaluates every cell, and writes the report files into config.out_dir.
RunReport run_pipeline(const RunConfig& config, PipelineMode mode = PipelineMode::all);

/// A rendered table: header plus string cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Writes `stem`.csv or `stem`.md and returns the path.
std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const Table& table, OutputFormat format);

std::string format_number(double value, int decimals = 6);

}  // namespace predictkit
