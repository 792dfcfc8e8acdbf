#pragma once

#include <span>
#include <vector>

#include "predictkit/newey_west.hpp"
#include "predictkit/series.hpp"

namespace predictkit {

struct ForecastRow {
    int year = 0;
    double actual = 0.0;
    double null_forecast = 0.0;  // prevailing historical mean
    double alt_forecast = 0.0;   // predictive regression refit on the past
    bool degraded = false;       // alt fell back to the null forecast (rank-deficient window)
};

struct ForecastSet {
    int start_year = 0;
    int min_train = 20;
    std::vector<ForecastRow> rows;

    std::size_t degraded_count() const;
};

/// Expanding-window one-step-ahead forecasts.
///
/// Joint observations are the years t with y_t and every predictor at t-1 present. The
/// first forecast targets joint observation number min_train + 1; every later joint
/// observation is forecast too. The null forecast is the mean of all y strictly before t,
/// the alternative is the OLS fit of y on lagged x over the joint observations before t,
/// evaluated at x_{t-1}.
ForecastSet expanding_forecasts(const YearSeries& y, std::span<const YearSeries> predictors,
                                int min_train = 20);

/// 1 - SSE(alt) / SSE(null). Throws DegenerateError when SSE(null) is zero and
/// SampleSizeError below two rows.
double oos_r2(const ForecastSet& forecasts);

struct ClarkWestResult {
    double statistic = 0.0;
    double p_value = 0.5;  // one-sided, 1 - Phi(statistic)
    bool degenerate = false;
};

struct ClarkWestOptions {
    bool hac = false;  // Newey-West standard error for the mean adjusted loss differential
    LagRule lags{};
};

/// MSPE-adjusted comparison of the nested forecasts.
ClarkWestResult clark_west(const ForecastSet& forecasts, ClarkWestOptions options = {});

/// Per-row adjusted differential (a - n)^2 - (a - h)^2 + (n - h)^2.
std::vector<double> clark_west_adjusted(const ForecastSet& forecasts);

double standard_normal_cdf(double x);

}  // namespace predictkit
