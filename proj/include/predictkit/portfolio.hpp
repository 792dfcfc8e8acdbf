#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "predictkit/derive.hpp"
#include "predictkit/forecast.hpp"
#include "predictkit/series.hpp"

namespace predictkit {

inline constexpr double kMaxWeight = 1.5;

/// clamp(forecast / (gamma * variance), 0, 1.5). Decimal forecast over decimal variance.
double mv_weight(double forecast, double variance, double gamma = 5.0);

/// Sample variance (n-1) of the last `window` values of `history` strictly before `year`.
/// Throws SampleSizeError with fewer than `window` such values.
double variance_forecast(const YearSeries& history, int year, int window = 20);

struct PortfolioTrack {
    std::vector<int> years;
    Eigen::VectorXd weights;
    Eigen::VectorXd returns;  // simple portfolio return
    Eigen::VectorXd bill;     // simple bill return
    double gamma = 5.0;
    std::vector<int> skipped_years;
};

/// R_p = R_f + w (R_a - R_f). Years missing a weight, asset, or bill return are skipped.
PortfolioTrack realized_track(std::span<const int> years, std::span<const double> weights,
                              const YearSeries& asset_return, const YearSeries& bill_return,
                              double gamma = 5.0);

/// 100 * (mean - gamma/2 * var), n-1 variance. Needs two years.
double cer(const PortfolioTrack& track);

/// mean / sd of R_p - R_f; nullopt when the excess returns have zero dispersion.
std::optional<double> sharpe(const PortfolioTrack& track);

struct CerComparison {
    double gain = 0.0;  // percentage points
    double z = 0.0;
};

/// CER(alt) - CER(null) with a delta-method z statistic over the joint moments of the
/// two return tracks. Needs aligned tracks with at least five years.
CerComparison cer_gain_z(const PortfolioTrack& null_track, const PortfolioTrack& alt_track);

/// (1/T) sum_t sum_k |w_{k,t+1} - w_{k,t}| over the bill and risky weights, T transitions.
double turnover(std::span<const double> weights);

/// turnover(alt) / turnover(null); +inf when only the null is static, 1 when both are.
double relative_turnover(std::span<const double> null_weights, std::span<const double> alt_weights);

struct EconSettings {
    double gamma = 5.0;
    int variance_window = 20;
};

struct EconReport {
    std::optional<double> null_sharpe;
    std::optional<double> alt_sharpe;
    double null_cer = 0.0;
    double alt_cer = 0.0;
    double cer_gain = 0.0;
    double cer_z = 0.0;
    double relative_turnover = 1.0;  // alt over null
    double null_turnover = 0.0;
    double alt_turnover = 0.0;
    std::size_t n_years = 0;
    std::vector<int> flagged_years;  // zero variance forecast or missing returns
    bool extreme = false;            // |gain| beyond 100 percentage points
    PortfolioTrack null_track;
    PortfolioTrack alt_track;
};

/// Backtests the null and alternative forecasts of `forecasts` on the asset in `series`.
EconReport evaluate_economic_value(const ForecastSet& forecasts, const DerivedSeries& series,
                                   EconSettings settings = {});

}  // namespace predictkit
