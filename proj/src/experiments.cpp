#include "antijam/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "antijam/channel_game.hpp"
#include "antijam/hla.hpp"
#include "antijam/power_game.hpp"
#include "antijam/rng.hpp"
#include "antijam/scenario.hpp"

namespace antijam {

namespace {

constexpr char kCsvHeader[] = "config_param,config_value,metric,mean,sd,ci95,reps";

// Replication r of a plan derives independent streams for the topology draw
// and the learning run from master_seed + r.
constexpr std::uint64_t kScenarioStream = 0x7363656e6172696full;
constexpr std::uint64_t kLearningStream = 0x6c6561726e696e67ull;

// Converged-tail fraction of epochs used for the per-replication channel
// metrics.
constexpr double kTailFraction = 0.25;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_channel_engine(const std::string& engine) {
    return engine == "channel-hla" || engine == "channel-random";
}

bool is_power_engine(const std::string& engine) {
    return engine == "power-bayesian" || engine == "power-average";
}

// Canonical (section, key) for a sweep parameter name; short aliases accepted.
std::pair<std::string, std::string> param_target(const std::string& param) {
    if (param == "num_users" || param == "N") return {"network", "num_users"};
    if (param == "num_channels" || param == "M") return {"network", "num_channels"};
    if (param == "user_power" || param == "P_n") return {"powers", "user_power"};
    if (param == "jammer_power" || param == "P_j") return {"powers", "jammer_power"};
    if (param == "epsilon" || param == "eps" || param == "observation_error") {
        return {"power_game", "observation_error"};
    }
    if (param == "user_cost" || param == "jammer_cost" || param == "noise_power" ||
        param == "user_power_cap" || param == "jammer_power_cap") {
        return {"power_game", param};
    }
    throw ConfigError("bad_value", "unknown sweep parameter '" + param + "'");
}

LearningParams learning_from_config(const Config& cfg) {
    LearningParams p;
    p.sla_step = cfg.get_double_or("learning", "sla_step", p.sla_step);
    p.q_learning_rate = cfg.get_double_or("learning", "q_learning_rate", p.q_learning_rate);
    p.epsilon0 = cfg.get_double_or("learning", "epsilon0", p.epsilon0);
    p.epsilon_decay = cfg.get_double_or("learning", "epsilon_decay", p.epsilon_decay);
    p.epsilon_floor = cfg.get_double_or("learning", "epsilon_floor", p.epsilon_floor);
    p.slots_per_epoch = static_cast<int>(cfg.get_int_or("learning", "slots_per_epoch", p.slots_per_epoch));
    p.epochs = static_cast<int>(cfg.get_int_or("learning", "epochs", p.epochs));
    p.validate();
    return p;
}

PowerGameSpec power_spec_from_config(const Config& cfg) {
    PowerGameSpec spec;
    spec.signal_gain.values = cfg.get_doubles("power_game", "hs_support");
    spec.jam_gain.values = cfg.get_doubles("power_game", "hj_support");
    if (cfg.has("power_game", "hs_probs")) {
        spec.signal_gain.probs = cfg.get_doubles("power_game", "hs_probs");
    } else if (spec.signal_gain.values.size() == 1) {
        spec.signal_gain.probs = {1.0};
    } else {
        throw ConfigError("missing_field", "[power_game] hs_probs");
    }
    if (cfg.has("power_game", "hj_probs")) {
        spec.jam_gain.probs = cfg.get_doubles("power_game", "hj_probs");
    } else if (spec.jam_gain.values.size() == 1) {
        spec.jam_gain.probs = {1.0};
    } else {
        throw ConfigError("missing_field", "[power_game] hj_probs");
    }
    spec.noise_power = cfg.get_double("power_game", "noise_power");
    spec.user_cost = cfg.get_double("power_game", "user_cost");
    spec.jammer_cost = cfg.get_double("power_game", "jammer_cost");
    spec.user_power_cap = cfg.get_double("power_game", "user_power_cap");
    spec.jammer_power_cap = cfg.get_double("power_game", "jammer_power_cap");
    spec.observation_error = cfg.get_double_or("power_game", "observation_error", 0.0);
    spec.validate();
    return spec;
}

struct ChannelMetrics {
    double ewaij = 0.0;
    double rate = 0.0;  // per-user expected achievable rate
};

ChannelMetrics channel_replication(const Config& cfg, const std::string& engine,
                                   std::uint64_t base_seed) {
    const NetworkScenario scenario =
        scenario_from_config(cfg, splitmix64(base_seed ^ kScenarioStream));
    const LearningParams params = learning_from_config(cfg);
    const std::uint64_t run_seed = splitmix64(base_seed ^ kLearningStream);
    const Trajectory traj = engine == "channel-hla"
                                ? hla_run(scenario, params, run_seed)
                                : random_baseline_run(scenario, params, run_seed);

    const int epochs = static_cast<int>(traj.epochs.size());
    const int tail = std::max(1, static_cast<int>(epochs * kTailFraction));
    ChannelMetrics m;
    for (int e = epochs - tail; e < epochs; ++e) {
        m.ewaij += traj.epochs[e].ewaij;
        m.rate += traj.epochs[e].sum_rate / scenario.num_users;
    }
    m.ewaij /= tail;
    m.rate /= tail;
    return m;
}

void append_power_rows(CsvDocument& doc, const std::string& param, const std::string& value,
                       const std::string& prefix, const EquilibriumReport& rep, int reps) {
    const auto add = [&](const std::string& metric, double v) {
        doc.rows.push_back(CsvRow{param, value, prefix + metric, v, 0.0, 0.0, reps});
    };
    add("rate", rep.rate);
    add("user_utility", rep.user_utility);
    add("jammer_utility", rep.jammer_utility);
    add("leader_power", rep.leader_power);
    add("follower_power", rep.follower_power);
}

}  // namespace

SummaryStats summarize(const std::vector<double>& samples) {
    SummaryStats s;
    s.count = static_cast<int>(samples.size());
    if (s.count == 0) return s;
    double total = 0.0;
    for (double v : samples) total += v;
    s.mean = total / s.count;
    if (s.count > 1) {
        double ss = 0.0;
        for (double v : samples) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / (s.count - 1));
        s.ci95 = 1.96 * s.sd / std::sqrt(static_cast<double>(s.count));
    }
    return s;
}

std::string CsvDocument::to_string() const {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += r.config_param;
        out += ',';
        out += r.config_value;
        out += ',';
        out += r.metric;
        out += ',';
        out += fmt(r.mean);
        out += ',';
        out += fmt(r.sd);
        out += ',';
        out += fmt(r.ci95);
        out += ',';
        out += std::to_string(r.reps);
        out += '\n';
    }
    return out;
}

CsvDocument CsvDocument::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw ConfigError("bad_value", "CSV document does not start with the expected header");
    }
    CsvDocument doc;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 7) throw ConfigError("bad_value", "CSV row with wrong field count: " + line);
        CsvRow r;
        r.config_param = fields[0];
        r.config_value = fields[1];
        r.metric = fields[2];
        r.mean = std::strtod(fields[3].c_str(), nullptr);
        r.sd = std::strtod(fields[4].c_str(), nullptr);
        r.ci95 = std::strtod(fields[5].c_str(), nullptr);
        r.reps = std::atoi(fields[6].c_str());
        doc.rows.push_back(std::move(r));
    }
    return doc;
}

const CsvRow* CsvDocument::find(const std::string& config_param, const std::string& config_value,
                                const std::string& metric) const {
    for (const auto& r : rows) {
        if (r.config_param == config_param && r.config_value == config_value && r.metric == metric) {
            return &r;
        }
    }
    return nullptr;
}

void write_csv(const CsvDocument& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.to_string();
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("io_error", "cannot open output file '" + path + "'");
    out << doc.to_string();
    if (!out) throw ConfigError("io_error", "failed writing output file '" + path + "'");
}

void ExperimentPlan::validate() const {
    static const char* kinds[] = {"channel-hla", "channel-random", "power-bayesian",
                                  "power-average", "sweep"};
    bool known = false;
    for (const char* k : kinds) known = known || kind == k;
    if (!known) throw ConfigError("unknown_kind", "experiment kind '" + kind + "'");
    if (kind == "sweep" && engine.empty()) {
        throw ConfigError("missing_field", "[experiment] engine");
    }
    if (!is_channel_engine(engine) && !is_power_engine(engine)) {
        throw ConfigError("unknown_kind", "experiment engine '" + engine + "'");
    }
    if (kind == "sweep") {
        if (param.empty()) throw ConfigError("missing_field", "[experiment] param");
        if (values.empty()) throw ConfigError("bad_value", "sweep values must be nonempty");
        param_target(param);  // rejects unknown names
    }
    if (reps < 1) throw ConfigError("bad_value", "replication count must be >= 1");
}

ExperimentPlan plan_from_config(const Config& cfg, std::optional<std::uint64_t> seed_override,
                                std::optional<int> reps_override) {
    ExperimentPlan plan;
    plan.kind = cfg.get_string_or("experiment", "kind", "sweep");
    plan.engine = plan.kind == "sweep" ? cfg.get_string_or("experiment", "engine", "")
                                       : plan.kind;
    if (plan.kind == "sweep") {
        plan.param = cfg.get_string_or("experiment", "param", "");
        if (cfg.has("experiment", "values")) plan.values = cfg.get_doubles("experiment", "values");
    }
    plan.reps = reps_override ? *reps_override
                              : static_cast<int>(cfg.get_int_or("experiment", "reps", 1));
    plan.seed = seed_override ? *seed_override : cfg.get_u64_or("experiment", "seed", 1);
    plan.out = cfg.get_string_or("experiment", "out", "");
    plan.validate();
    return plan;
}

CsvDocument run_plan(const ExperimentPlan& plan, const Config& cfg) {
    plan.validate();
    CsvDocument doc;

    struct Configuration {
        std::string param;
        std::string value;
        Config cfg;
    };
    std::vector<Configuration> configurations;
    if (plan.param.empty()) {
        configurations.push_back({"-", "-", cfg});
    } else {
        const auto [section, key] = param_target(plan.param);
        for (double v : plan.values) {
            Config overridden = cfg;
            overridden.set(section, key, fmt_full(v));
            configurations.push_back({plan.param, fmt(v), std::move(overridden)});
        }
    }

    for (const auto& configuration : configurations) {
        if (is_channel_engine(plan.engine)) {
            std::vector<double> ewaij_samples, rate_samples;
            ewaij_samples.reserve(plan.reps);
            rate_samples.reserve(plan.reps);
            for (int r = 0; r < plan.reps; ++r) {
                const ChannelMetrics m =
                    channel_replication(configuration.cfg, plan.engine, plan.seed + r);
                ewaij_samples.push_back(m.ewaij);
                rate_samples.push_back(m.rate);
            }
            const SummaryStats se = summarize(ewaij_samples);
            const SummaryStats sr = summarize(rate_samples);
            doc.rows.push_back(CsvRow{configuration.param, configuration.value, "ewaij", se.mean,
                                      se.sd, se.ci95, se.count});
            doc.rows.push_back(CsvRow{configuration.param, configuration.value, "rate", sr.mean,
                                      sr.sd, sr.ci95, sr.count});
        } else {
            const PowerGameSpec spec = power_spec_from_config(configuration.cfg);
            const EquilibriumReport rep = plan.engine == "power-bayesian"
                                              ? leader_optimize(spec)
                                              : average_game_baseline(spec);
            append_power_rows(doc, configuration.param, configuration.value, "", rep, plan.reps);
        }
    }
    return doc;
}

std::vector<Comparison> compare(const CsvDocument& arm_a, const CsvDocument& arm_b,
                                const std::string& metric) {
    std::vector<Comparison> out;
    for (const auto& ra : arm_a.rows) {
        if (ra.metric != metric) continue;
        const CsvRow* rb = arm_b.find(ra.config_param, ra.config_value, metric);
        if (!rb) continue;
        if (rb->mean == 0.0) {
            throw ConfigError("bad_value", "baseline mean is zero for metric '" + metric + "'");
        }
        Comparison c;
        c.config_param = ra.config_param;
        c.config_value = ra.config_value;
        c.improvement = (ra.mean - rb->mean) / rb->mean;
        const double se_a = ra.ci95 / 1.96;
        const double se_b = rb->ci95 / 1.96;
        const double var = (se_a / rb->mean) * (se_a / rb->mean) +
                           (ra.mean * se_b / (rb->mean * rb->mean)) *
                               (ra.mean * se_b / (rb->mean * rb->mean));
        c.ci95 = 1.96 * std::sqrt(var);
        out.push_back(c);
    }
    return out;
}

CsvDocument run_channel_command(const Config& cfg, std::optional<std::uint64_t> seed_override,
                                std::optional<int> reps_override) {
    ExperimentPlan plan;
    plan.kind = "channel-hla";
    plan.engine = "channel-hla";
    plan.reps = reps_override ? *reps_override
                              : static_cast<int>(cfg.get_int_or("experiment", "reps", 1));
    plan.seed = seed_override ? *seed_override : cfg.get_u64_or("experiment", "seed", 1);

    CsvDocument doc;
    for (const char* arm : {"hla", "random"}) {
        plan.kind = plan.engine = std::string("channel-") + arm;
        CsvDocument arm_doc = run_plan(plan, cfg);
        for (auto& row : arm_doc.rows) {
            row.config_param = "arm";
            row.config_value = arm;
            doc.rows.push_back(std::move(row));
        }
    }
    return doc;
}

CsvDocument run_power_command(const Config& cfg, const std::vector<double>& eps_values) {
    PowerGameSpec spec = power_spec_from_config(cfg);
    std::vector<double> eps = eps_values;
    if (eps.empty()) eps.push_back(spec.observation_error);

    CsvDocument doc;
    for (double e : eps) {
        PowerGameSpec swept = spec;
        swept.observation_error = e;
        swept.validate();
        append_power_rows(doc, "epsilon", fmt(e), "bayes_", leader_optimize(swept), 1);
        append_power_rows(doc, "epsilon", fmt(e), "avg_", average_game_baseline(swept), 1);
    }
    return doc;
}

CsvDocument run_sweep_command(const Config& cfg, std::optional<std::uint64_t> seed_override,
                              std::optional<int> reps_override) {
    const ExperimentPlan plan = plan_from_config(cfg, seed_override, reps_override);
    return run_plan(plan, cfg);
}

CsvDocument run_oracle_command(const Config& cfg) {
    CsvDocument doc;
    bool any = false;
    const auto add = [&](const std::string& metric, double v) {
        doc.rows.push_back(CsvRow{"-", "-", metric, v, 0.0, 0.0, 1});
    };
    if (cfg.has_section("network")) {
        const NetworkScenario scenario = load_scenario(cfg);
        const StackelbergSolution sol = brute_force_stackelberg(scenario);
        add("se_jammer_channel", sol.jammer_channel + 1);
        for (int n = 0; n < scenario.num_users; ++n) {
            add("se_user_channel_" + std::to_string(n + 1), sol.profile.user_channels[n] + 1);
        }
        add("se_jammer_utility", sol.jammer_utility);
        add("se_ewaij", sol.ewaij);
        any = true;
    }
    if (cfg.has_section("power_game")) {
        const PowerGameSpec spec = power_spec_from_config(cfg);
        const EquilibriumReport rep = grid_oracle(spec, 1000);
        append_power_rows(doc, "-", "-", "oracle_", rep, 1);
        any = true;
    }
    if (!any) {
        throw ConfigError("missing_field", "config defines neither a [network] scenario nor [power_game]");
    }
    return doc;
}

}  // namespace antijam
