#pragma once

// Seeded synthetic country panel with every column the pipeline maps: levels of
// payout-price ratios, total returns, bills, bond yields, and capitalizations.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace synthetic {

struct PanelSpec {
    std::vector<std::string> countries{"Alpha", "Beta", "Gamma"};
    int first_year = 1870;
    int last_year = 2015;
    std::uint64_t seed = 17;
};

inline std::string panel_csv(const PanelSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal;
    std::ostringstream out;
    out.precision(12);
    out << "country,year,eq_tr,eq_dp,hs_tr,hs_rp,bd_tr,bd_yield,bill,cap_eq,cap_hs,cap_bd,cap_bill\n";
    for (const auto& country : spec.countries) {
        double ldp = -3.3 + 0.2 * normal(rng);
        double lrp = -3.0 + 0.2 * normal(rng);
        double byield = 0.05;
        double bond_price = 100.0;
        for (int year = spec.first_year; year <= spec.last_year; ++year) {
            const double bill = 0.03 + 0.01 * normal(rng);
            // Equity: persistent log dp, returns weakly predicted by lagged dp.
            const double ldp_next = -3.3 * (1 - 0.8) + 0.8 * ldp + 0.12 * normal(rng);
            const double eq_tr = std::exp(0.06 + 0.08 * (ldp + 3.3) + 0.18 * normal(rng)) - 1.0;
            const double hs_tr = std::exp(0.05 + 0.05 * (lrp + 3.0) + 0.08 * normal(rng)) - 1.0;
            const double lrp_next = -3.0 * (1 - 0.9) + 0.9 * lrp + 0.05 * normal(rng);
            const double coupon = byield * bond_price;
            const double next_yield = std::max(0.005, byield + 0.004 * normal(rng));
            const double next_price = coupon / next_yield;
            const double bd_tr = (coupon + next_price - bond_price) / bond_price;
            out << country << ',' << year << ',' << eq_tr << ',' << std::exp(ldp_next) << ',' << hs_tr << ','
                << std::exp(lrp_next) << ',' << bd_tr << ',' << byield << ',' << bill << ','
                << 1.0 + 0.3 * std::abs(normal(rng)) << ',' << 2.0 + 0.5 * std::abs(normal(rng)) << ','
                << 0.5 + 0.1 * std::abs(normal(rng)) << ',' << 0.2 + 0.05 * std::abs(normal(rng)) << '\n';
            ldp = ldp_next;
            lrp = lrp_next;
            byield = next_yield;
            bond_price = next_price;
        }
    }
    return out.str();
}

inline std::string config_text(const std::filesystem::path& data, const std::filesystem::path& out_dir) {
    std::ostringstream c;
    c << "data = " << data.string() << "\n"
      << "release = synthetic\n"
      << "equity.return = eq_tr\nequity.bill = bill\nequity.payout_price = eq_dp\n"
      << "housing.return = hs_tr\nhousing.bill = bill\nhousing.payout_price = hs_rp\n"
      << "bond.return = bd_tr\nbond.bill = bill\nbond.coupon_yield = bd_yield\n"
      << "cap.equity = cap_eq\ncap.housing = cap_hs\ncap.bond = cap_bd\ncap.bill = cap_bill\n"
      << "sim.seed = 424242\nsim.reps = 200\n"
      << "out = " << out_dir.string() << "\n";
    return c.str();
}

/// Writes the panel and a matching config into `dir`; returns the config path.
inline std::filesystem::path write_fixture(const std::filesystem::path& dir, const PanelSpec& spec = {}) {
    std::filesystem::create_directories(dir);
    const auto data = dir / "panel.csv";
    std::ofstream(data) << panel_csv(spec);
    const auto conf = dir / "run.conf";
    std::ofstream(conf) << config_text(data, dir / "out");
    return conf;
}

}  // namespace synthetic
