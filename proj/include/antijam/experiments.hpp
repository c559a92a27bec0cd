#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antijam/config.hpp"

namespace antijam {

// Replication aggregate: mean, sample standard deviation, and the normal
// 95% confidence half-width 1.96 sd / sqrt(n).
struct SummaryStats {
    double mean = 0.0;
    double sd = 0.0;
    double ci95 = 0.0;
    int count = 0;
};

SummaryStats summarize(const std::vector<double>& samples);

// One row of the fixed output schema
// config_param,config_value,metric,mean,sd,ci95,reps.
struct CsvRow {
    std::string config_param;
    std::string config_value;
    std::string metric;
    double mean = 0.0;
    double sd = 0.0;
    double ci95 = 0.0;
    int reps = 0;
};

struct CsvDocument {
    std::vector<CsvRow> rows;

    /// Header plus newline-terminated rows; dot decimal, byte-stable.
    std::string to_string() const;
    static CsvDocument parse(const std::string& text);

    const CsvRow* find(const std::string& config_param, const std::string& config_value,
                       const std::string& metric) const;
};

/// Writes to the path, or to stdout when the path is empty. Unwritable paths
/// raise ConfigError("io_error").
void write_csv(const CsvDocument& doc, const std::string& path);

struct ExperimentPlan {
    std::string kind;            // channel-hla | channel-random | power-bayesian | power-average | sweep
    std::string engine;          // resolved engine (for kind = sweep; else == kind)
    std::string param;           // swept parameter name, empty for single runs
    std::vector<double> values;  // swept values, empty for single runs
    int reps = 1;
    std::uint64_t seed = 1;
    std::string out;             // output path; empty = stdout

    void validate() const;  // unknown_kind / bad_value
};

/// Reads the [experiment] section. Optional overrides win over config values.
ExperimentPlan plan_from_config(const Config& cfg, std::optional<std::uint64_t> seed_override,
                                std::optional<int> reps_override);

/// Runs the plan: one row per (configuration, metric). Replication r derives
/// its scenario and learning streams from master_seed + r. Channel engines
/// report tail-mean EWAIJ and per-user expected achievable rate; power
/// engines report expected rate and both utilities.
CsvDocument run_plan(const ExperimentPlan& plan, const Config& cfg);

struct Comparison {
    std::string config_param;
    std::string config_value;
    double improvement = 0.0;  // (mean_a - mean_b) / mean_b
    double ci95 = 0.0;         // first-order propagated half-width
};

/// Relative improvement of arm_a over arm_b for one metric, matched on
/// (config_param, config_value). Rows without a counterpart are skipped.
std::vector<Comparison> compare(const CsvDocument& arm_a, const CsvDocument& arm_b,
                                const std::string& metric);

// CLI entry points (the binary in tools/ is a thin wrapper around these).

/// HLA and random-baseline arms on one scenario; rows keyed config_param=arm.
CsvDocument run_channel_command(const Config& cfg, std::optional<std::uint64_t> seed_override,
                                std::optional<int> reps_override);

/// Bayesian game vs. average-game baseline per observation error value; rows
/// keyed config_param=epsilon with arm-prefixed metrics.
CsvDocument run_power_command(const Config& cfg, const std::vector<double>& eps_values);

/// ExperimentPlan from the [experiment] section.
CsvDocument run_sweep_command(const Config& cfg, std::optional<std::uint64_t> seed_override,
                              std::optional<int> reps_override);

/// Brute-force solutions for small instances: channel-game Stackelberg
/// solution when a scenario is configured, power-game grid oracle when
/// [power_game] is present.
CsvDocument run_oracle_command(const Config& cfg);

}  // namespace antijam
