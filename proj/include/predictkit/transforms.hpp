#pragma once

#include <map>
#include <span>

#include "predictkit/series.hpp"

namespace predictkit {

/// ln(1 + asset_return) - ln(1 + bill_return). Both returns must exceed -1.
double log_excess_return(double asset_return, double bill_return);

/// Log coupon-price ratio ln(c_t / p_t) from the coupon yield c_t / p_{t-1} and the
/// total bond return, using p_t / p_{t-1} = 1 + R_t - y_t.
double coupon_price_from_yield(double coupon_yield, double bond_return);

/// Log payout growth ln(D_t / D_{t-1}) from level payout-price ratios at t-1 and t and
/// the total return at t.
double payout_growth(double dp_prev, double dp_curr, double total_return);

enum class Component { bond, equity, housing, bill };

struct PortfolioSeries {
    YearSeries simple_return;
    YearSeries excess_return;  // log, over bills
};

/// Value-weighted portfolio of `returns` with weights cap_k / sum(cap). A year is produced
/// only when every component return, every capitalization, and the bill return are present.
/// Negative capitalizations and zero weight sums raise DataError.
PortfolioSeries build_representative_portfolio(const std::map<Component, YearSeries>& returns,
                                               const std::map<Component, YearSeries>& caps,
                                               const YearSeries& bill_return);

struct SeriesSummary {
    double mean = 0.0;
    double sd = 0.0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    std::size_t n = 0;
};

/// Quantile with linear interpolation between order statistics (h = (n-1)p).
double quantile_sorted(std::span<const double> sorted, double p);

SeriesSummary summarize_series(std::span<const double> values);

/// Clips values to their [q, 1-q] empirical quantiles.
YearSeries winsorize(const YearSeries& series, double q);

}  // namespace predictkit
