#include "predictkit/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "predictkit/error.hpp"

namespace predictkit {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (auto t = trim(item); !t.empty()) out.push_back(t);
    }
    return out;
}

double to_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out)) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    }
    return out;
}

long long to_integer(const std::string& key, const std::string& value) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
    return out;
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "on" || value == "1") return true;
    if (value == "false" || value == "no" || value == "off" || value == "0") return false;
    throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<Asset> to_assets(const std::string& key, const std::string& value) {
    std::vector<Asset> out;
    for (const auto& name : split_list(value)) {
        const auto asset = parse_asset(name);
        if (!asset) throw ConfigError("config key '" + key + "': unknown asset '" + name + "'");
        out.push_back(*asset);
    }
    return out;
}

Asset market_key(const std::string& key, const std::string& prefix) {
    const auto asset = parse_asset(prefix);
    if (!asset || is_portfolio(*asset)) throw ConfigError("unknown config key '" + key + "'");
    return *asset;
}

}  // namespace

std::vector<Asset> RunConfig::assets_for(const std::string& country) const {
    if (auto it = country_assets.find(country); it != country_assets.end()) return it->second;
    return assets;
}

void RunConfig::validate(bool needs_seed) const {
    if (data_files.empty()) throw ConfigError("no data files configured");
    if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
    if (min_train < 2) throw ConfigError("min_train must be at least 2");
    if (variance_window < 2) throw ConfigError("variance_window must be at least 2");
    if (!(is_threshold > 0.0)) throw ConfigError("is_threshold must be positive");
    if (!(oos_alpha > 0.0 && oos_alpha < 1.0)) throw ConfigError("oos_alpha must lie in (0, 1)");
    if (sim_reps < 1) throw ConfigError("sim.reps must be positive");
    if (sim_length && *sim_length < 30) throw ConfigError("sim.length must be at least 30");
    if (hist_bins < 1) throw ConfigError("sim.bins must be positive");
    if (needs_seed && !seed) throw ConfigError("a seed is required for simulation runs (sim.seed or --seed)");

    std::vector<Asset> requested = assets;
    for (const auto& [country, list] : country_assets) requested.insert(requested.end(), list.begin(), list.end());
    columns.validate(requested);
}

RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir) {
    RunConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        const auto dot = key.find('.');
        const std::string prefix = dot == std::string::npos ? key : key.substr(0, dot);
        const std::string suffix = dot == std::string::npos ? std::string{} : key.substr(dot + 1);

        if (key == "data") {
            for (const auto& p : split_list(value)) {
                std::filesystem::path path(p);
                config.data_files.push_back(path.is_relative() && !base_dir.empty() ? base_dir / path : path);
            }
        } else if (key == "release") {
            config.release = value;
        } else if (key == "country_column") {
            config.columns.country_column = value;
        } else if (key == "year_column") {
            config.columns.year_column = value;
        } else if (key == "countries") {
            config.countries = split_list(value);
        } else if (key == "assets") {
            config.assets = to_assets(key, value);
        } else if (prefix == "assets") {
            config.country_assets[suffix] = to_assets(key, value);
        } else if (prefix == "cap") {
            if (suffix == "equity") config.columns.caps.equity = value;
            else if (suffix == "housing") config.columns.caps.housing = value;
            else if (suffix == "bond") config.columns.caps.bond = value;
            else if (suffix == "bill") config.columns.caps.bill = value;
            else throw ConfigError("unknown config key '" + key + "'");
        } else if (prefix == "scale") {
            config.columns.scale[suffix] = to_double(key, value);
        } else if (prefix == "bond" || prefix == "equity" || prefix == "housing") {
            AssetColumns& cols = config.columns.markets[market_key(key, prefix)];
            if (suffix == "return") cols.total_return = value;
            else if (suffix == "bill") cols.bill_return = value;
            else if (suffix == "payout_price" && prefix != "bond") cols.payout_price = value;
            else if (suffix == "coupon_yield" && prefix == "bond") cols.coupon_yield = value;
            else throw ConfigError("unknown config key '" + key + "'");
        } else if (key == "winsorize") {
            config.columns.winsorize = to_bool(key, value);
        } else if (key == "winsorize_quantile") {
            config.columns.winsorize_quantile = to_double(key, value);
        } else if (key == "gamma") {
            config.gamma = to_double(key, value);
        } else if (key == "min_train") {
            config.min_train = static_cast<int>(to_integer(key, value));
        } else if (key == "variance_window") {
            config.variance_window = static_cast<int>(to_integer(key, value));
        } else if (key == "nw_lags") {
            config.lags.fixed = value == "auto" ? -1 : static_cast<int>(to_integer(key, value));
            if (value != "auto" && config.lags.fixed < 0) throw ConfigError("nw_lags must be non-negative or auto");
        } else if (key == "is_threshold") {
            config.is_threshold = to_double(key, value);
        } else if (key == "oos_alpha") {
            config.oos_alpha = to_double(key, value);
        } else if (key == "cer_z_threshold") {
            if (value == "off") config.cer_z_threshold.reset();
            else config.cer_z_threshold = to_double(key, value);
        } else if (key == "cw_hac") {
            config.cw_hac = to_bool(key, value);
        } else if (key == "sim.reps") {
            config.sim_reps = static_cast<int>(to_integer(key, value));
        } else if (key == "sim.seed") {
            const long long seed = to_integer(key, value);
            if (seed < 0) throw ConfigError("sim.seed must be non-negative");
            config.seed = static_cast<std::uint64_t>(seed);
        } else if (key == "sim.length") {
            if (value == "auto") config.sim_length.reset();
            else config.sim_length = static_cast<int>(to_integer(key, value));
        } else if (key == "sim.shocks") {
            if (value == "gaussian") config.sim_shocks = ShockMode::gaussian;
            else if (value == "bootstrap") config.sim_shocks = ShockMode::bootstrap;
            else throw ConfigError("sim.shocks must be gaussian or bootstrap");
        } else if (key == "sim.demean") {
            config.sim_demean = to_bool(key, value);
        } else if (key == "sim.bins") {
            config.hist_bins = static_cast<int>(to_integer(key, value));
        } else if (key == "workers") {
            const long long w = to_integer(key, value);
            if (w < 0) throw ConfigError("workers must be non-negative");
            config.workers = static_cast<unsigned>(w);
        } else if (key == "out") {
            std::filesystem::path path(value);
            config.out_dir = path.is_relative() && !base_dir.empty() ? base_dir / path : path;
        } else if (key == "format") {
            if (value == "csv") config.format = OutputFormat::csv;
            else if (value == "markdown") config.format = OutputFormat::markdown;
            else throw ConfigError("format must be csv or markdown");
        } else if (key == "table1_blank") {
            config.table1_blank = to_bool(key, value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_run_config(in, path.parent_path());
}

}  // namespace predictkit
