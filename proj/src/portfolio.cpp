#include "predictkit/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "predictkit/error.hpp"

namespace predictkit {
namespace {

double sample_variance(const Eigen::VectorXd& v) {
    const double mean = v.mean();
    return (v.array() - mean).square().sum() / static_cast<double>(v.size() - 1);
}

}  // namespace

double mv_weight(double forecast, double variance, double gamma) {
    if (!(variance > 0.0)) throw DomainError("mv_weight: forecast variance must be positive");
    if (!(gamma > 0.0)) throw DomainError("mv_weight: risk aversion must be positive");
    return std::clamp(forecast / (gamma * variance), 0.0, kMaxWeight);
}

double variance_forecast(const YearSeries& history, int year, int window) {
    if (window < 2) throw DomainError("variance_forecast: window must be at least 2");
    Eigen::VectorXd last(window);
    int filled = 0;
    for (auto it = std::make_reverse_iterator(history.lower_bound(year)); it != history.rend() && filled < window;
         ++it) {
        last(window - 1 - filled) = it->second;
        ++filled;
    }
    if (filled < window) {
        throw SampleSizeError("variance_forecast: " + std::to_string(filled) + " observations before " +
                              std::to_string(year) + ", need " + std::to_string(window));
    }
    return sample_variance(last);
}

PortfolioTrack realized_track(std::span<const int> years, std::span<const double> weights,
                              const YearSeries& asset_return, const YearSeries& bill_return, double gamma) {
    if (years.size() != weights.size()) throw DataError("realized_track: years and weights differ in length");
    PortfolioTrack track;
    track.gamma = gamma;
    std::vector<double> w, rp, rf;
    for (std::size_t i = 0; i < years.size(); ++i) {
        const auto ra = value_at(asset_return, years[i]);
        const auto bill = value_at(bill_return, years[i]);
        if (!ra || !bill || !std::isfinite(weights[i])) {
            track.skipped_years.push_back(years[i]);
            continue;
        }
        track.years.push_back(years[i]);
        w.push_back(weights[i]);
        rf.push_back(*bill);
        rp.push_back(*bill + weights[i] * (*ra - *bill));
    }
    track.weights = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
    track.returns = Eigen::Map<const Eigen::VectorXd>(rp.data(), static_cast<Eigen::Index>(rp.size()));
    track.bill = Eigen::Map<const Eigen::VectorXd>(rf.data(), static_cast<Eigen::Index>(rf.size()));
    return track;
}

double cer(const PortfolioTrack& track) {
    if (track.returns.size() < 2) throw SampleSizeError("cer: need at least two years");
    return 100.0 * (track.returns.mean() - 0.5 * track.gamma * sample_variance(track.returns));
}

std::optional<double> sharpe(const PortfolioTrack& track) {
    if (track.returns.size() < 2) throw SampleSizeError("sharpe: need at least two years");
    const Eigen::VectorXd excess = track.returns - track.bill;
    const double var = sample_variance(excess);
    if (!(var > 0.0)) return std::nullopt;
    return excess.mean() / std::sqrt(var);
}

CerComparison cer_gain_z(const PortfolioTrack& null_track, const PortfolioTrack& alt_track) {
    const Eigen::Index n = null_track.returns.size();
    if (alt_track.returns.size() != n) throw DataError("cer_gain_z: tracks are not aligned");
    if (n < 5) throw SampleSizeError("cer_gain_z: need at least five years");
    if (null_track.gamma != alt_track.gamma) throw DataError("cer_gain_z: tracks use different risk aversion");
    const double gamma = alt_track.gamma;

    // Moment vector per year: (R_null, R_alt, R_null^2, R_alt^2).
    Eigen::MatrixXd z(n, 4);
    z.col(0) = null_track.returns;
    z.col(1) = alt_track.returns;
    z.col(2) = null_track.returns.array().square();
    z.col(3) = alt_track.returns.array().square();
    const Eigen::RowVector4d m = z.colwise().mean();
    const Eigen::MatrixXd centred = z.rowwise() - m;
    const Eigen::Matrix4d moment_cov = centred.transpose() * centred / static_cast<double>(n);

    // CER_k = mu_k - gamma/2 (m2_k - mu_k^2); gradient of CER_alt - CER_null.
    const Eigen::Vector4d grad(-(1.0 + gamma * m(0)), 1.0 + gamma * m(1), 0.5 * gamma, -0.5 * gamma);
    const double avar = grad.dot(moment_cov * grad);

    CerComparison out;
    out.gain = cer(alt_track) - cer(null_track);
    if (avar > 0.0) out.z = (out.gain / 100.0) / std::sqrt(avar / static_cast<double>(n));
    return out;
}

double turnover(std::span<const double> weights) {
    if (weights.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t t = 0; t + 1 < weights.size(); ++t) {
        const double risky = std::abs(weights[t + 1] - weights[t]);
        const double bill = std::abs((1.0 - weights[t + 1]) - (1.0 - weights[t]));
        total += risky + bill;
    }
    return total / static_cast<double>(weights.size() - 1);
}

double relative_turnover(std::span<const double> null_weights, std::span<const double> alt_weights) {
    const double null_turnover = turnover(null_weights);
    const double alt_turnover = turnover(alt_weights);
    if (null_turnover == 0.0) return alt_turnover == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return alt_turnover / null_turnover;
}

EconReport evaluate_economic_value(const ForecastSet& forecasts, const DerivedSeries& series, EconSettings settings) {
    EconReport report;
    std::vector<int> years;
    std::vector<double> null_w, alt_w;
    for (const auto& row : forecasts.rows) {
        double variance = 0.0;
        try {
            variance = variance_forecast(series.excess_return, row.year, settings.variance_window);
            null_w.push_back(mv_weight(row.null_forecast, variance, settings.gamma));
            alt_w.push_back(mv_weight(row.alt_forecast, variance, settings.gamma));
            years.push_back(row.year);
        } catch (const DomainError&) {
            report.flagged_years.push_back(row.year);
        } catch (const SampleSizeError&) {
            report.flagged_years.push_back(row.year);
        }
    }

    report.null_track = realized_track(years, null_w, series.asset_return, series.bill_return, settings.gamma);
    report.alt_track = realized_track(years, alt_w, series.asset_return, series.bill_return, settings.gamma);
    report.flagged_years.insert(report.flagged_years.end(), report.null_track.skipped_years.begin(),
                                report.null_track.skipped_years.end());
    std::sort(report.flagged_years.begin(), report.flagged_years.end());
    report.n_years = static_cast<std::size_t>(report.null_track.returns.size());

    report.null_sharpe = sharpe(report.null_track);
    report.alt_sharpe = sharpe(report.alt_track);
    report.null_cer = cer(report.null_track);
    report.alt_cer = cer(report.alt_track);
    const CerComparison comparison = cer_gain_z(report.null_track, report.alt_track);
    report.cer_gain = comparison.gain;
    report.cer_z = comparison.z;

    const std::span<const double> nw(report.null_track.weights.data(), report.n_years);
    const std::span<const double> aw(report.alt_track.weights.data(), report.n_years);
    report.null_turnover = turnover(nw);
    report.alt_turnover = turnover(aw);
    report.relative_turnover = relative_turnover(nw, aw);
    report.extreme = !std::isfinite(report.cer_gain) || std::abs(report.cer_gain) > 100.0;
    return report;
}

}  // namespace predictkit
