#include "predictkit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "predictkit/error.hpp"

namespace predictkit {

double log_excess_return(double asset_return, double bill_return) {
    if (!(asset_return > -1.0) || !(bill_return > -1.0)) {
        throw DomainError("log_excess_return: return <= -1");
    }
    return std::log1p(asset_return) - std::log1p(bill_return);
}

double coupon_price_from_yield(double coupon_yield, double bond_return) {
    if (!(coupon_yield > 0.0)) throw DomainError("coupon_price_from_yield: coupon yield must be positive");
    const double price_ratio = 1.0 + bond_return - coupon_yield;  // p_t / p_{t-1}
    if (!(price_ratio > 0.0)) throw DomainError("coupon_price_from_yield: implied price ratio <= 0");
    return std::log(coupon_yield / price_ratio);
}

double payout_growth(double dp_prev, double dp_curr, double total_return) {
    if (!(dp_prev > 0.0) || !(dp_curr > 0.0)) throw DomainError("payout_growth: payout-price ratio must be positive");
    if (!(total_return > -1.0)) throw DomainError("payout_growth: return <= -1");
    return std::log(dp_curr / dp_prev) + std::log1p(total_return) - std::log1p(dp_curr);
}

PortfolioSeries build_representative_portfolio(const std::map<Component, YearSeries>& returns,
                                               const std::map<Component, YearSeries>& caps,
                                               const YearSeries& bill_return) {
    if (returns.empty()) throw DataError("build_representative_portfolio: no components");
    for (const auto& [component, series] : returns) {
        if (!caps.count(component)) throw DataError("build_representative_portfolio: component without capitalization");
    }

    PortfolioSeries out;
    for (const auto& [year, first_return] : returns.begin()->second) {
        const auto bill = value_at(bill_return, year);
        if (!bill) continue;

        double cap_sum = 0.0;
        double weighted = 0.0;
        bool complete = true;
        for (const auto& [component, series] : returns) {
            const auto r = value_at(series, year);
            const auto cap = value_at(caps.at(component), year);
            if (!r || !cap) {
                complete = false;
                break;
            }
            if (*cap < 0.0) throw DataError("negative capitalization in " + std::to_string(year));
            cap_sum += *cap;
            weighted += *cap * *r;
        }
        if (!complete) continue;
        if (!(cap_sum > 0.0)) throw DataError("capitalization weights sum to zero in " + std::to_string(year));

        const double simple = weighted / cap_sum;
        out.simple_return.emplace(year, simple);
        out.excess_return.emplace(year, log_excess_return(simple, *bill));
    }
    return out;
}

double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw DomainError("quantile of an empty series");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

SeriesSummary summarize_series(std::span<const double> values) {
    if (values.empty()) throw DomainError("summarize_series: empty series");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    SeriesSummary s;
    s.n = sorted.size();
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    s.min = sorted.front();
    s.max = sorted.back();
    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.5);
    s.q3 = quantile_sorted(sorted, 0.75);
    return s;
}

YearSeries winsorize(const YearSeries& series, double q) {
    if (series.empty()) return series;
    std::vector<double> sorted = values_of(series);
    std::sort(sorted.begin(), sorted.end());
    const double lo = quantile_sorted(sorted, q);
    const double hi = quantile_sorted(sorted, 1.0 - q);
    YearSeries out;
    for (const auto& [year, v] : series) out.emplace(year, std::clamp(v, lo, hi));
    return out;
}

}  // namespace predictkit
