#include "predictkit/derive.hpp"

#include <cmath>

#include "predictkit/error.hpp"
#include "predictkit/transforms.hpp"

namespace predictkit {
namespace {

struct MarketInputs {
    YearSeries total_return;
    YearSeries bill_return;
    YearSeries ratio_level;   // payout-price level (equity/housing) or coupon yield (bond)
};

MarketInputs market_inputs(const ObservationPanel& panel, const ColumnConfig& config,
                           const std::string& country, Asset asset) {
    const auto it = config.markets.find(asset);
    if (it == config.markets.end()) throw ConfigError("no column mapping for " + std::string(to_string(asset)));
    const AssetColumns& cols = it->second;
    MarketInputs in;
    in.total_return = panel.series(country, cols.total_return);
    in.bill_return = panel.series(country, cols.bill_return);
    in.ratio_level = panel.series(country, asset == Asset::bond ? cols.coupon_yield : cols.payout_price);
    return in;
}

YearSeries excess_returns(const YearSeries& total, const YearSeries& bill) {
    YearSeries out;
    for (const auto& [year, r] : total) {
        if (auto rf = value_at(bill, year)) out.emplace(year, log_excess_return(r, *rf));
    }
    return out;
}

/// Log payout-price ratio. Bonds back the coupon-price ratio out of the yield.
YearSeries log_ratio(const MarketInputs& in, Asset asset) {
    YearSeries out;
    for (const auto& [year, level] : in.ratio_level) {
        if (asset == Asset::bond) {
            if (auto r = value_at(in.total_return, year)) out.emplace(year, coupon_price_from_yield(level, *r));
        } else {
            if (!(level > 0.0)) throw DomainError("non-positive payout-price ratio in " + std::to_string(year));
            out.emplace(year, std::log(level));
        }
    }
    return out;
}

YearSeries growth_series(const MarketInputs& in) {
    YearSeries out;
    for (const auto& [year, dp] : in.ratio_level) {
        const auto prev = value_at(in.ratio_level, year - 1);
        const auto r = value_at(in.total_return, year);
        if (prev && r) out.emplace(year, payout_growth(*prev, dp, *r));
    }
    return out;
}

}  // namespace

std::string ratio_name(Asset asset) {
    switch (asset) {
        case Asset::bond: return "CP";
        case Asset::equity: return "DP";
        case Asset::housing: return "RP";
        default: return "";
    }
}

DerivedSeries derive_series(const ObservationPanel& panel, const ColumnConfig& config,
                            const std::string& country, Asset asset) {
    DerivedSeries out;
    out.country = country;
    out.asset = asset;

    if (!is_portfolio(asset)) {
        const MarketInputs in = market_inputs(panel, config, country, asset);
        out.asset_return = in.total_return;
        out.bill_return = in.bill_return;
        out.excess_return = excess_returns(in.total_return, in.bill_return);
        out.payout_price = log_ratio(in, asset);
        if (asset != Asset::bond) out.payout_growth = growth_series(in);
        if (config.winsorize) {
            out.excess_return = winsorize(out.excess_return, config.winsorize_quantile);
            out.payout_price = winsorize(out.payout_price, config.winsorize_quantile);
        }
        out.ratios = {out.payout_price};
        out.ratio_names = {ratio_name(asset)};
        return out;
    }

    std::map<Component, YearSeries> returns;
    std::map<Component, YearSeries> caps;
    const YearSeries bill = panel.series(country, config.markets.at(Asset::equity).bill_return);

    for (Asset market : kSingleAssets) {
        const MarketInputs in = market_inputs(panel, config, country, market);
        YearSeries ratio = log_ratio(in, market);
        if (config.winsorize) ratio = winsorize(ratio, config.winsorize_quantile);
        out.ratios.push_back(std::move(ratio));
        out.ratio_names.push_back(ratio_name(market));
    }

    auto add = [&](Component c, Asset market, const std::string& cap_column) {
        returns[c] = panel.series(country, config.markets.at(market).total_return);
        caps[c] = panel.series(country, cap_column);
    };
    add(Component::equity, Asset::equity, config.caps.equity);
    add(Component::housing, Asset::housing, config.caps.housing);
    if (asset == Asset::wealth) {
        add(Component::bond, Asset::bond, config.caps.bond);
        returns[Component::bill] = bill;
        caps[Component::bill] = panel.series(country, config.caps.bill);
    }

    PortfolioSeries portfolio = build_representative_portfolio(returns, caps, bill);
    out.asset_return = std::move(portfolio.simple_return);
    out.bill_return = bill;
    out.excess_return = config.winsorize ? winsorize(portfolio.excess_return, config.winsorize_quantile)
                                         : std::move(portfolio.excess_return);
    return out;
}

}  // namespace predictkit
