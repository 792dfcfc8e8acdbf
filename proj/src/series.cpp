#include "predictkit/series.hpp"

namespace predictkit {

std::string_view to_string(Asset asset) {
    switch (asset) {
        case Asset::bond: return "bond";
        case Asset::equity: return "equity";
        case Asset::housing: return "housing";
        case Asset::risky: return "risky";
        case Asset::wealth: return "wealth";
    }
    return "unknown";
}

std::optional<Asset> parse_asset(std::string_view name) {
    for (Asset a : kAllAssets) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

std::vector<double> values_of(const YearSeries& series) {
    std::vector<double> out;
    out.reserve(series.size());
    for (const auto& [year, value] : series) out.push_back(value);
    return out;
}

}  // namespace predictkit
