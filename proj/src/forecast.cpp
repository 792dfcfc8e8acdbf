#include "predictkit/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "predictkit/error.hpp"
#include "predictkit/ols.hpp"
#include "predictkit/regression.hpp"

namespace predictkit {

std::size_t ForecastSet::degraded_count() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ForecastRow& r) { return r.degraded; }));
}

ForecastSet expanding_forecasts(const YearSeries& y, std::span<const YearSeries> predictors, int min_train) {
    if (min_train < 2) throw DomainError("expanding_forecasts: min_train must be at least 2");
    const LaggedDesign d = lagged_design(y, predictors);
    const Eigen::Index n = d.y.size();
    if (n < min_train + 1) {
        throw SampleSizeError("expanding_forecasts: " + std::to_string(n) + " joint observations, need " +
                              std::to_string(min_train + 1));
    }

    ForecastSet set;
    set.min_train = min_train;
    set.start_year = d.years[static_cast<std::size_t>(min_train)];

    // Running sum over the full y series for the prevailing mean.
    auto y_it = y.begin();
    double y_sum = 0.0;
    std::size_t y_count = 0;

    for (Eigen::Index k = min_train; k < n; ++k) {
        const int year = d.years[static_cast<std::size_t>(k)];
        while (y_it != y.end() && y_it->first < year) {
            y_sum += y_it->second;
            ++y_count;
            ++y_it;
        }

        ForecastRow row;
        row.year = year;
        row.actual = d.y(k);
        row.null_forecast = y_sum / static_cast<double>(y_count);
        try {
            const RegressionFit<double> fit = ols(d.y.head(k), d.X.topRows(k));
            row.alt_forecast = d.X.row(k).dot(fit.coefficients());
        } catch (const SingularityError&) {
            row.alt_forecast = row.null_forecast;
            row.degraded = true;
        } catch (const SampleSizeError&) {
            row.alt_forecast = row.null_forecast;
            row.degraded = true;
        }
        set.rows.push_back(row);
    }
    return set;
}

double oos_r2(const ForecastSet& forecasts) {
    if (forecasts.rows.size() < 2) throw SampleSizeError("oos_r2: need at least two forecast rows");
    double sse_alt = 0.0;
    double sse_null = 0.0;
    double scale = 0.0;
    for (const auto& r : forecasts.rows) {
        sse_alt += (r.actual - r.alt_forecast) * (r.actual - r.alt_forecast);
        sse_null += (r.actual - r.null_forecast) * (r.actual - r.null_forecast);
        scale += r.actual * r.actual;
    }
    // Round-off from averaging a constant series is not a forecast error.
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(sse_null > 64.0 * eps * eps * scale)) throw DegenerateError("oos_r2: null forecast errors are all zero");
    return 1.0 - sse_alt / sse_null;
}

std::vector<double> clark_west_adjusted(const ForecastSet& forecasts) {
    std::vector<double> adj;
    adj.reserve(forecasts.rows.size());
    for (const auto& r : forecasts.rows) {
        const double e_null = r.actual - r.null_forecast;
        const double e_alt = r.actual - r.alt_forecast;
        const double gap = r.null_forecast - r.alt_forecast;
        adj.push_back(e_null * e_null - e_alt * e_alt + gap * gap);
    }
    return adj;
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

ClarkWestResult clark_west(const ForecastSet& forecasts, ClarkWestOptions options) {
    if (forecasts.rows.size() < 5) throw SampleSizeError("clark_west: need at least five forecast rows");
    const std::vector<double> adj = clark_west_adjusted(forecasts);
    const auto n = static_cast<Eigen::Index>(adj.size());
    const Eigen::Map<const Eigen::VectorXd> f(adj.data(), n);
    const double mean = f.mean();
    const Eigen::VectorXd centred = f.array() - mean;

    double var_of_mean = 0.0;
    if (options.hac) {
        const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, 1);
        const int lags = std::min<int>(options.lags.lags_for(n), static_cast<int>(n) - 1);
        var_of_mean = newey_west_covariance(ones, centred, lags)(0, 0);
    } else {
        var_of_mean = centred.squaredNorm() / static_cast<double>(n - 1) / static_cast<double>(n);
    }

    ClarkWestResult out;
    if (!(var_of_mean > 0.0)) {
        out.degenerate = true;
        return out;
    }
    out.statistic = mean / std::sqrt(var_of_mean);
    out.p_value = 1.0 - standard_normal_cdf(out.statistic);
    return out;
}

}  // namespace predictkit
