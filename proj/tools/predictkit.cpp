// predictkit command-line driver: tables, sim, all.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "predictkit/config.hpp"
#include "predictkit/error.hpp"
#include "predictkit/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;

struct Options {
    std::string config_path;
    std::vector<std::string> data;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> reps;
    std::string format;
};

void add_common(CLI::App* cmd, Options& opts, bool sim) {
    cmd->add_option("--config", opts.config_path, "Run configuration file (key = value)")->required();
    cmd->add_option("--data", opts.data, "Delimited data file(s); overrides the config's data key");
    cmd->add_option("--out", opts.out, "Output directory");
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "markdown"}));
    if (sim) {
        cmd->add_option("--seed", opts.seed, "Simulation seed");
        cmd->add_option("--reps", opts.reps, "Simulation repetitions")->check(CLI::PositiveNumber);
    }
}

int run(const Options& opts, predictkit::PipelineMode mode) {
    using namespace predictkit;
    RunConfig config;
    try {
        config = load_run_config(opts.config_path);
        if (!opts.data.empty()) config.data_files.assign(opts.data.begin(), opts.data.end());
        if (!opts.out.empty()) config.out_dir = opts.out;
        if (opts.seed) config.seed = *opts.seed;
        if (opts.reps) config.sim_reps = *opts.reps;
        if (!opts.format.empty()) config.format = opts.format == "csv" ? OutputFormat::csv : OutputFormat::markdown;
    } catch (const Error& e) {
        std::cerr << "predictkit: configuration error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        const RunReport report = run_pipeline(config, mode);
        for (const auto& f : report.files) std::cout << f.string() << "\n";
        if (report.partial()) {
            std::cerr << "predictkit: " << report.failed_cells.size() << " failed cell(s):\n";
            for (const auto& msg : report.failed_cells) std::cerr << "  " << msg << "\n";
            return kExitPartial;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "predictkit: configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "predictkit: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"predictkit: payout-price return predictability reports"};
    app.require_subcommand(1);

    Options tables_opts, sim_opts, all_opts;
    auto* tables = app.add_subcommand("tables", "In-sample, out-of-sample, economic-value and summary tables");
    add_common(tables, tables_opts, false);
    auto* sim = app.add_subcommand("sim", "Pooled VAR estimates and null simulation");
    add_common(sim, sim_opts, true);
    auto* all = app.add_subcommand("all", "Tables and simulation");
    add_common(all, all_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (*tables) return run(tables_opts, predictkit::PipelineMode::tables);
    if (*sim) return run(sim_opts, predictkit::PipelineMode::sim);
    return run(all_opts, predictkit::PipelineMode::all);
}
