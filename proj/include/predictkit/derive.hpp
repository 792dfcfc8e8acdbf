#pragma once

#include <string>
#include <vector>

#include "predictkit/panel.hpp"
#include "predictkit/series.hpp"

namespace predictkit {

/// Aligned per-(country, asset) series consumed by the regression, forecasting, and
/// portfolio modules.
struct DerivedSeries {
    std::string country;
    Asset asset = Asset::equity;
    YearSeries excess_return;  // log excess return over bills
    YearSeries payout_price;   // log payout-price ratio; empty for risky/wealth
    /// Predictors: {payout_price} for single markets, {cp, dp, rp} for portfolios.
    std::vector<YearSeries> ratios;
    std::vector<std::string> ratio_names;
    YearSeries payout_growth;  // equity and housing only
    YearSeries asset_return;   // simple total return of the asset or portfolio
    YearSeries bill_return;    // simple bill return
};

/// Builds the series for one (country, asset) cell. Missing inputs leave the year absent.
DerivedSeries derive_series(const ObservationPanel& panel, const ColumnConfig& config,
                            const std::string& country, Asset asset);

/// Name of the predictor for a single market ("CP", "DP", "RP").
std::string ratio_name(Asset asset);

}  // namespace predictkit
