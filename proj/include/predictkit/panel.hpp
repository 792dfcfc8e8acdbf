#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "predictkit/series.hpp"

namespace predictkit {

/// Panel variable names for one market.
struct AssetColumns {
    std::string total_return;
    std::string bill_return;
    /// Level payout-price ratio (dividend/price, rent/price). Unused for bonds.
    std::string payout_price;
    /// Coupon yield c_t / p_{t-1}. Bonds only.
    std::string coupon_yield;
};

/// Capitalization columns used to value-weight the representative portfolios.
struct CapitalizationColumns {
    std::string equity;
    std::string housing;
    std::string bond;
    std::string bill;

    bool complete_for(Asset portfolio) const;
};

struct ColumnConfig {
    std::string country_column = "country";
    std::string year_column = "year";
    std::map<Asset, AssetColumns> markets;
    CapitalizationColumns caps;
    /// Multiplier applied to a raw column on load (e.g. 0.01 for percent columns).
    std::map<std::string, double> scale;
    bool winsorize = false;
    double winsorize_quantile = 0.01;

    /// Every panel variable the loader must find, deduplicated and sorted.
    std::vector<std::string> mapped_columns() const;

    /// Throws ConfigError when a requested asset lacks its mappings.
    void validate(std::span<const Asset> requested) const;
};

struct Provenance {
    std::vector<std::filesystem::path> files;
    std::string release;
};

/// Immutable-after-load country x year x variable grid.
class ObservationPanel {
public:
    /// Throws DataError when the key already holds a value.
    void insert(const std::string& country, int year, const std::string& variable, double value);

    std::optional<double> get(const std::string& country, int year, const std::string& variable) const;

    /// Empty series when the country or variable is unknown.
    YearSeries series(const std::string& country, const std::string& variable) const;

    std::vector<std::string> countries() const;
    std::size_t size() const { return size_; }

    Provenance provenance;

private:
    std::map<std::string, std::map<std::string, YearSeries>> data_;
    std::size_t size_ = 0;
};

/// Loads comma- or tab-delimited files with a header row.
///
/// Only mapped columns are read. Empty cells and the tokens NA, NaN, and "." are
/// treated as missing. A mapped column absent from every file is a ConfigError; a
/// repeated (country, year) row within a file or a repeated (country, year,
/// variable) cell across files is a DataError, as is a non-numeric cell.
ObservationPanel load_panel(std::span<const std::filesystem::path> files, const ColumnConfig& config,
                            std::string release = {});

}  // namespace predictkit
