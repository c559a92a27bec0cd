// antijam — deterministic simulator for anti-jamming Stackelberg games.
//
// Subcommands:
//   channel  HLA vs. random channel selection on one scenario
//   power    Bayesian power-control game vs. the average-game baseline
//   sweep    experiment plan from the [experiment] config section
//   oracle   brute-force solutions for small instances
//
// All results are CSV (config_param,config_value,metric,mean,sd,ci95,reps)
// on stdout or --out; diagnostics go to stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antijam/config.hpp"
#include "antijam/experiments.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> reps;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_seed_reps) {
    cmd->add_option("--config", args.config_path, "configuration file")->required();
    cmd->add_option("--out", args.out_path, "output CSV path (default: stdout)");
    if (with_seed_reps) {
        cmd->add_option("--seed", args.seed, "master seed (overrides [experiment] seed)");
        cmd->add_option("--reps", args.reps, "replications (overrides [experiment] reps)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-jamming Stackelberg game simulator"};
    app.require_subcommand(1);

    CommonArgs channel_args, power_args, sweep_args, oracle_args;
    std::vector<double> eps_values;

    CLI::App* channel = app.add_subcommand("channel", "HLA vs. random selection on one scenario");
    add_common(channel, channel_args, true);

    CLI::App* power = app.add_subcommand("power", "Bayesian vs. average power-control game");
    add_common(power, power_args, false);
    power->add_option("--eps", eps_values, "observation error values to sweep (comma separated)")
        ->delimiter(',');

    CLI::App* sweep = app.add_subcommand("sweep", "run the [experiment] plan from the config");
    add_common(sweep, sweep_args, true);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force solutions for small instances");
    add_common(oracle, oracle_args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        antijam::CsvDocument doc;
        std::string out_path;
        // --out wins; otherwise the [experiment] out key; otherwise stdout
        const auto resolve_out = [](const antijam::Config& cfg, const std::string& flag) {
            return flag.empty() ? cfg.get_string_or("experiment", "out", "") : flag;
        };
        if (channel->parsed()) {
            const auto cfg = antijam::Config::parse_file(channel_args.config_path);
            doc = antijam::run_channel_command(cfg, channel_args.seed, channel_args.reps);
            out_path = resolve_out(cfg, channel_args.out_path);
        } else if (power->parsed()) {
            const auto cfg = antijam::Config::parse_file(power_args.config_path);
            doc = antijam::run_power_command(cfg, eps_values);
            out_path = resolve_out(cfg, power_args.out_path);
        } else if (sweep->parsed()) {
            const auto cfg = antijam::Config::parse_file(sweep_args.config_path);
            doc = antijam::run_sweep_command(cfg, sweep_args.seed, sweep_args.reps);
            out_path = resolve_out(cfg, sweep_args.out_path);
        } else {
            const auto cfg = antijam::Config::parse_file(oracle_args.config_path);
            doc = antijam::run_oracle_command(cfg);
            out_path = resolve_out(cfg, oracle_args.out_path);
        }
        antijam::write_csv(doc, out_path);
        return 0;
    } catch (const std::exception& e) {
        // ConfigError::what() carries its machine-readable kind prefix
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
