#include "predictkit/regression.hpp"

#include "predictkit/error.hpp"

namespace predictkit {

LaggedDesign lagged_design(const YearSeries& y, std::span<const YearSeries> predictors) {
    std::vector<int> years;
    for (const auto& [year, value] : y) {
        bool complete = true;
        for (const auto& x : predictors) {
            if (!x.count(year - 1)) {
                complete = false;
                break;
            }
        }
        if (complete) years.push_back(year);
    }

    LaggedDesign d;
    const auto n = static_cast<Eigen::Index>(years.size());
    const auto k = static_cast<Eigen::Index>(predictors.size());
    d.y.resize(n);
    d.X.resize(n, k + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const int year = years[static_cast<std::size_t>(i)];
        d.y(i) = y.at(year);
        d.X(i, 0) = 1.0;
        for (Eigen::Index j = 0; j < k; ++j) d.X(i, j + 1) = predictors[static_cast<std::size_t>(j)].at(year - 1);
    }
    d.years = std::move(years);
    return d;
}

RegressionFit<double> lagged_regression(const YearSeries& y, std::span<const YearSeries> predictors, LagRule lags) {
    const LaggedDesign d = lagged_design(y, predictors);
    if (d.y.size() < kMinRegressionObs) {
        throw SampleSizeError("regression needs at least " + std::to_string(kMinRegressionObs) +
                              " aligned observations, got " + std::to_string(d.y.size()));
    }
    RegressionFit<double> fit = ols(d.y, d.X);
    newey_west_t(fit, d.X, lags.lags_for(fit.n_obs));
    fit.start_year = d.years.front();
    fit.end_year = d.years.back();
    return fit;
}

RegressionFit<double> predictive_regression(const DerivedSeries& series, LagRule lags) {
    return lagged_regression(series.excess_return, series.ratios, lags);
}

RegressionFit<double> payout_growth_regression(const DerivedSeries& series, LagRule lags) {
    if (series.asset != Asset::equity && series.asset != Asset::housing) {
        throw UnsupportedAssetError("payout growth regression is defined for equity and housing only");
    }
    const YearSeries* predictor = &series.payout_price;
    return lagged_regression(series.payout_growth, std::span<const YearSeries>(predictor, 1), lags);
}

}  // namespace predictkit
