#include "predictkit/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "predictkit/error.hpp"

namespace predictkit {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    std::string out(s.substr(first, last - first + 1));
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
    return out;
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            current.push_back(c);
        } else if (c == delimiter && !quoted) {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

bool is_missing_token(const std::string& cell) {
    return cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan" || cell == "." || cell == "NULL";
}

std::optional<double> parse_double(const std::string& cell) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

}  // namespace

bool CapitalizationColumns::complete_for(Asset portfolio) const {
    if (portfolio == Asset::risky) return !equity.empty() && !housing.empty();
    if (portfolio == Asset::wealth) return !equity.empty() && !housing.empty() && !bond.empty() && !bill.empty();
    return true;
}

std::vector<std::string> ColumnConfig::mapped_columns() const {
    std::set<std::string> names;
    for (const auto& [asset, cols] : markets) {
        for (const auto* c : {&cols.total_return, &cols.bill_return, &cols.payout_price, &cols.coupon_yield}) {
            if (!c->empty()) names.insert(*c);
        }
    }
    for (const auto* c : {&caps.equity, &caps.housing, &caps.bond, &caps.bill}) {
        if (!c->empty()) names.insert(*c);
    }
    return {names.begin(), names.end()};
}

void ColumnConfig::validate(std::span<const Asset> requested) const {
    auto require_market = [&](Asset a) {
        const auto it = markets.find(a);
        const std::string name(to_string(a));
        if (it == markets.end() || it->second.total_return.empty()) {
            throw ConfigError("no return mapping for " + name);
        }
        if (it->second.bill_return.empty()) throw ConfigError("no bill mapping for " + name);
        if (a == Asset::bond && it->second.coupon_yield.empty()) {
            throw ConfigError("no coupon yield mapping for bond");
        }
        if (a != Asset::bond && it->second.payout_price.empty()) {
            throw ConfigError("no payout-price mapping for " + name);
        }
    };
    for (Asset a : requested) {
        if (!is_portfolio(a)) {
            require_market(a);
            continue;
        }
        // Portfolios regress on all three ratios and need the component markets.
        for (Asset m : kSingleAssets) require_market(m);
        if (!caps.complete_for(a)) {
            throw ConfigError("capitalization mappings incomplete for " + std::string(to_string(a)));
        }
    }
    if (winsorize && !(winsorize_quantile > 0.0 && winsorize_quantile < 0.5)) {
        throw ConfigError("winsorize_quantile must lie in (0, 0.5)");
    }
}

void ObservationPanel::insert(const std::string& country, int year, const std::string& variable, double value) {
    auto& series = data_[country][variable];
    if (!series.emplace(year, value).second) {
        throw DataError("duplicate value for (" + country + ", " + std::to_string(year) + ", " + variable + ")");
    }
    ++size_;
}

std::optional<double> ObservationPanel::get(const std::string& country, int year,
                                            const std::string& variable) const {
    const auto c = data_.find(country);
    if (c == data_.end()) return std::nullopt;
    const auto v = c->second.find(variable);
    if (v == c->second.end()) return std::nullopt;
    return value_at(v->second, year);
}

YearSeries ObservationPanel::series(const std::string& country, const std::string& variable) const {
    const auto c = data_.find(country);
    if (c == data_.end()) return {};
    const auto v = c->second.find(variable);
    return v == c->second.end() ? YearSeries{} : v->second;
}

std::vector<std::string> ObservationPanel::countries() const {
    std::vector<std::string> out;
    for (const auto& [country, vars] : data_) out.push_back(country);
    return out;
}

ObservationPanel load_panel(std::span<const std::filesystem::path> files, const ColumnConfig& config,
                            std::string release) {
    const std::vector<std::string> mapped = config.mapped_columns();
    std::set<std::string> seen_columns;
    ObservationPanel panel;
    panel.provenance.files.assign(files.begin(), files.end());
    panel.provenance.release = std::move(release);

    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open data file " + path.string());

        std::string header_line;
        if (!std::getline(in, header_line)) throw DataError(path.string() + ": empty file");
        const char delimiter = header_line.find('\t') != std::string::npos ? '\t' : ',';
        const std::vector<std::string> header = split_fields(header_line, delimiter);

        auto column_index = [&](const std::string& name) -> std::optional<std::size_t> {
            const auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) return std::nullopt;
            return static_cast<std::size_t>(it - header.begin());
        };
        const auto country_col = column_index(config.country_column);
        const auto year_col = column_index(config.year_column);
        if (!country_col) throw ConfigError(path.string() + ": missing key column " + config.country_column);
        if (!year_col) throw ConfigError(path.string() + ": missing key column " + config.year_column);

        std::vector<std::pair<std::string, std::size_t>> columns;
        for (const auto& name : mapped) {
            if (auto idx = column_index(name)) {
                columns.emplace_back(name, *idx);
                seen_columns.insert(name);
            }
        }

        std::set<std::pair<std::string, int>> rows_seen;
        std::string line;
        std::size_t line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty()) continue;
            const std::vector<std::string> fields = split_fields(line, delimiter);
            const std::string locus = path.string() + ":" + std::to_string(line_no);
            auto field = [&](std::size_t idx) -> std::string { return idx < fields.size() ? fields[idx] : std::string{}; };

            const std::string country = field(*country_col);
            const auto year_value = parse_double(field(*year_col));
            if (country.empty() || !year_value || std::floor(*year_value) != *year_value) {
                throw DataError(locus + ": bad country/year key");
            }
            const int year = static_cast<int>(*year_value);
            if (!rows_seen.emplace(country, year).second) {
                throw DataError(locus + ": duplicate row for (" + country + ", " + std::to_string(year) + ")");
            }

            for (const auto& [name, idx] : columns) {
                const std::string cell = field(idx);
                if (is_missing_token(cell)) continue;
                const auto value = parse_double(cell);
                if (!value) throw DataError(locus + ": non-numeric value '" + cell + "' in column " + name);
                const auto scale = config.scale.find(name);
                const double scaled = scale == config.scale.end() ? *value : *value * scale->second;
                try {
                    panel.insert(country, year, name, scaled);
                } catch (const DataError& e) {
                    throw DataError(locus + ": " + e.what());
                }
            }
        }
    }

    for (const auto& name : mapped) {
        if (!seen_columns.count(name)) throw ConfigError("mapped column '" + name + "' not found in any data file");
    }
    return panel;
}

}  // namespace predictkit
