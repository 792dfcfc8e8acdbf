#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace predictkit {

/// Annual series keyed by calendar year. Missing years are absent keys.
using YearSeries = std::map<int, double>;

enum class Asset { bond, equity, housing, risky, wealth };

inline constexpr std::array<Asset, 5> kAllAssets{Asset::bond, Asset::equity, Asset::housing,
                                                 Asset::risky, Asset::wealth};
inline constexpr std::array<Asset, 3> kSingleAssets{Asset::bond, Asset::equity, Asset::housing};

std::string_view to_string(Asset asset);
std::optional<Asset> parse_asset(std::string_view name);

inline bool is_portfolio(Asset asset) { return asset == Asset::risky || asset == Asset::wealth; }

/// Value at `year`, if present.
inline std::optional<double> value_at(const YearSeries& series, int year) {
    if (auto it = series.find(year); it != series.end()) return it->second;
    return std::nullopt;
}

std::vector<double> values_of(const YearSeries& series);

}  // namespace predictkit
