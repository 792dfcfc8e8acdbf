#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "predictkit/derive.hpp"
#include "predictkit/newey_west.hpp"
#include "predictkit/ols.hpp"
#include "predictkit/series.hpp"

namespace predictkit {

/// Rows t where y_t and every predictor at t-1 are present (pairwise deletion).
struct LaggedDesign {
    std::vector<int> years;  // target years t
    Eigen::VectorXd y;
    Eigen::MatrixXd X;       // [1, x1_{t-1}, x2_{t-1}, ...]
};

LaggedDesign lagged_design(const YearSeries& y, std::span<const YearSeries> predictors);

inline constexpr Eigen::Index kMinRegressionObs = 10;

/// OLS + Newey-West fit of y_t on the lagged predictors, with the sample span recorded.
RegressionFit<double> lagged_regression(const YearSeries& y, std::span<const YearSeries> predictors,
                                        LagRule lags = {});

/// Excess return on the lagged payout-price ratio(s) of a derived cell.
RegressionFit<double> predictive_regression(const DerivedSeries& series, LagRule lags = {});

/// Payout growth on the lagged payout-price ratio. Equity and housing only.
RegressionFit<double> payout_growth_regression(const DerivedSeries& series, LagRule lags = {});

}  // namespace predictkit
