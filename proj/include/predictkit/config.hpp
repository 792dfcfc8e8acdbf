#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "predictkit/newey_west.hpp"
#include "predictkit/panel.hpp"
#include "predictkit/series.hpp"
#include "predictkit/var_sim.hpp"

namespace predictkit {

enum class OutputFormat { csv, markdown };

/// Everything a pipeline run needs. Parsed from a `key = value` file; see README for the
/// key list.
struct RunConfig {
    std::vector<std::filesystem::path> data_files;
    std::string release;
    ColumnConfig columns;
    std::vector<std::string> countries;  // empty: every country in the panel
    std::vector<Asset> assets{kAllAssets.begin(), kAllAssets.end()};
    std::map<std::string, std::vector<Asset>> country_assets;

    double gamma = 5.0;
    int min_train = 20;
    int variance_window = 20;
    LagRule lags{};
    double is_threshold = 1.645;
    double oos_alpha = 0.05;
    std::optional<double> cer_z_threshold;  // unset: CER flag is gain > 0 alone
    bool cw_hac = false;

    int sim_reps = 10000;
    std::optional<std::uint64_t> seed;
    std::optional<int> sim_length;  // unset: average per-country span
    ShockMode sim_shocks = ShockMode::gaussian;
    bool sim_demean = false;
    int hist_bins = 50;
    unsigned workers = 0;

    std::filesystem::path out_dir = "predictkit_out";
    OutputFormat format = OutputFormat::csv;
    bool table1_blank = false;  // render non-Y cells blank instead of N

    std::vector<Asset> assets_for(const std::string& country) const;

    /// Throws ConfigError for non-positive knobs, missing mappings, or a missing seed when
    /// `needs_seed` is set.
    void validate(bool needs_seed) const;
};

/// Parses the key-value format. Relative data paths resolve against `base_dir`.
RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace predictkit
