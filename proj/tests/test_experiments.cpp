#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "antijam/experiments.hpp"

using namespace antijam;

namespace {

const char* kChannelConfig =
    "[network]\n"
    "num_users = 2\n"
    "num_channels = 2\n"
    "bandwidth = 1e6\n"
    "noise_density = 1e-9\n"
    "[topology]\n"
    "area = 30\n"
    "path_loss_exponent = 2\n"
    "reference_gain = 1\n"
    "link_distance_min = 1\n"
    "link_distance_max = 3\n"
    "seed = 5\n"
    "[powers]\n"
    "user_power = 4\n"
    "jammer_power = 15\n"
    "[learning]\n"
    "sla_step = 0.1\n"
    "slots_per_epoch = 10\n"
    "epochs = 20\n";

const char* kPowerConfig =
    "[power_game]\n"
    "hs_support = 0.8 1.6\n"
    "hs_probs = 0.5 0.5\n"
    "hj_support = 0.1 2.5\n"
    "hj_probs = 0.5 0.5\n"
    "noise_power = 1\n"
    "user_cost = 0.3\n"
    "jammer_cost = 0.25\n"
    "user_power_cap = 5\n"
    "jammer_power_cap = 5\n"
    "observation_error = 0\n";

ExperimentPlan channel_plan(const std::string& engine, int reps) {
    ExperimentPlan plan;
    plan.kind = engine;
    plan.engine = engine;
    plan.reps = reps;
    plan.seed = 1000;
    return plan;
}

}  // namespace

TEST_CASE("summary statistics") {
    const SummaryStats s = summarize({1.0, 2.0, 3.0, 4.0});
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
    CHECK(s.ci95 == doctest::Approx(1.96 * s.sd / 2.0).epsilon(1e-12));
    CHECK(s.count == 4);

    const SummaryStats single = summarize({7.0});
    CHECK(single.mean == 7.0);
    CHECK(single.sd == 0.0);
    CHECK(single.ci95 == 0.0);
}

TEST_CASE("CSV round trip and byte determinism") {
    const Config cfg = Config::parse(kChannelConfig);
    const ExperimentPlan plan = channel_plan("channel-hla", 3);
    const CsvDocument a = run_plan(plan, cfg);
    const CsvDocument b = run_plan(plan, cfg);
    CHECK(a.to_string() == b.to_string());

    const CsvDocument parsed = CsvDocument::parse(a.to_string());
    CHECK(parsed.to_string() == a.to_string());
}

TEST_CASE("row count is configurations times metrics") {
    Config cfg = Config::parse(kChannelConfig);
    ExperimentPlan plan = channel_plan("channel-hla", 2);
    plan.kind = "sweep";
    plan.param = "num_users";
    plan.values = {2, 3, 4};
    const CsvDocument doc = run_plan(plan, cfg);
    CHECK(doc.rows.size() == 3 * 2);  // ewaij and rate per swept value
    CHECK(doc.rows[0].config_param == "num_users");
    CHECK(doc.rows[0].config_value == "2");
    CHECK(doc.rows[0].metric == "ewaij");
    CHECK(doc.rows[1].metric == "rate");
    // header + rows when rendered
    const std::string text = doc.to_string();
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

TEST_CASE("compare on synthetic documents") {
    CsvDocument a, b;
    for (int i = 0; i < 3; ++i) {
        const std::string value = std::to_string(i);
        a.rows.push_back(CsvRow{"N", value, "rate", 1.3 * (i + 1), 0.0, 0.0, 5});
        b.rows.push_back(CsvRow{"N", value, "rate", 1.0 * (i + 1), 0.0, 0.0, 5});
    }
    SUBCASE("identical arms give zero improvement") {
        const auto zero = compare(b, b, "rate");
        REQUIRE(zero.size() == 3);
        for (const auto& c : zero) CHECK(c.improvement == 0.0);
    }
    SUBCASE("a 1.3x arm gives 0.30 everywhere") {
        const auto cmp = compare(a, b, "rate");
        REQUIRE(cmp.size() == 3);
        for (const auto& c : cmp) CHECK(c.improvement == doctest::Approx(0.30).epsilon(1e-12));
    }
    SUBCASE("confidence propagation") {
        a.rows[0].ci95 = 0.196;  // se = 0.1
        b.rows[0].ci95 = 0.392;  // se = 0.2
        const auto cmp = compare(a, b, "rate");
        const double se = std::sqrt(0.1 * 0.1 / (1.0 * 1.0) +
                                    (1.3 * 0.2 / (1.0 * 1.0)) * (1.3 * 0.2));
        CHECK(cmp[0].ci95 == doctest::Approx(1.96 * se).epsilon(1e-12));
    }
}

TEST_CASE("HLA improves on random selection at every swept user count") {
    const char* text =
        "[network]\n"
        "num_users = 4\n"
        "num_channels = 4\n"
        "bandwidth = 1e6\n"
        "noise_density = 1e-9\n"
        "[topology]\n"
        "area = 2.5\n"
        "path_loss_exponent = 1\n"
        "reference_gain = 1\n"
        "link_distance_min = 1\n"
        "link_distance_max = 3\n"
        "seed = 5\n"
        "[powers]\n"
        "user_power = 4\n"
        "jammer_power = 15\n"
        "[learning]\n"
        "sla_step = 0.1\n"
        "slots_per_epoch = 25\n"
        "epochs = 80\n";
    const Config cfg = Config::parse(text);
    ExperimentPlan plan;
    plan.kind = "sweep";
    plan.engine = "channel-hla";
    plan.param = "num_users";
    plan.values = {3, 4, 5};
    plan.reps = 4;
    plan.seed = 500;
    const CsvDocument hla = run_plan(plan, cfg);
    plan.engine = "channel-random";
    const CsvDocument random_arm = run_plan(plan, cfg);
    const auto cmp = compare(hla, random_arm, "rate");
    REQUIRE(cmp.size() == 3);
    for (const auto& c : cmp) CHECK(c.improvement > 0.0);
}

TEST_CASE("confidence halfwidth shrinks roughly as one over sqrt n") {
    const Config cfg = Config::parse(kChannelConfig);
    const CsvDocument small = run_plan(channel_plan("channel-hla", 20), cfg);
    const CsvDocument large = run_plan(channel_plan("channel-hla", 80), cfg);
    const CsvRow* rs = small.find("-", "-", "rate");
    const CsvRow* rl = large.find("-", "-", "rate");
    REQUIRE(rs != nullptr);
    REQUIRE(rl != nullptr);
    const double ratio = rl->ci95 / rs->ci95;
    CHECK(ratio > 0.5 * 0.8);
    CHECK(ratio < 0.5 * 1.2);
}

TEST_CASE("plan validation errors") {
    const Config cfg = Config::parse(kChannelConfig);
    ExperimentPlan plan = channel_plan("channel-hla", 1);
    plan.kind = "nonsense";
    try {
        run_plan(plan, cfg);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.kind() == "unknown_kind");
    }
    plan = channel_plan("channel-hla", 0);
    CHECK_THROWS_AS(run_plan(plan, cfg), ConfigError);
    plan = channel_plan("channel-hla", 1);
    plan.kind = "sweep";
    plan.param = "num_users";
    CHECK_THROWS_AS(run_plan(plan, cfg), ConfigError);  // empty sweep values
}

TEST_CASE("unwritable output raises a named io error") {
    CsvDocument doc;
    doc.rows.push_back(CsvRow{"-", "-", "rate", 1.0, 0.0, 0.0, 1});
    try {
        write_csv(doc, "/nonexistent_dir_antijam/out.csv");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.kind() == "io_error");
    }
}

TEST_CASE("channel command emits both arms with the fixed schema") {
    const Config cfg = Config::parse(kChannelConfig);
    const CsvDocument doc = run_channel_command(cfg, 7, 2);
    REQUIRE(doc.rows.size() == 4);
    CHECK(doc.find("arm", "hla", "ewaij") != nullptr);
    CHECK(doc.find("arm", "hla", "rate") != nullptr);
    CHECK(doc.find("arm", "random", "ewaij") != nullptr);
    CHECK(doc.find("arm", "random", "rate") != nullptr);
    CHECK(doc.to_string() == run_channel_command(cfg, 7, 2).to_string());
}

TEST_CASE("power command sweeps the observation error deterministically") {
    const Config cfg = Config::parse(kPowerConfig);
    const CsvDocument doc = run_power_command(cfg, {-0.2, 0.0, 0.2});
    CHECK(doc.rows.size() == 3 * 10);  // 5 metrics per arm, two arms, three epsilons
    CHECK(doc.find("epsilon", "-0.2", "bayes_rate") != nullptr);
    CHECK(doc.find("epsilon", "0.2", "avg_rate") != nullptr);
    CHECK(doc.to_string() == run_power_command(cfg, {-0.2, 0.0, 0.2}).to_string());
}

TEST_CASE("oracle command covers both game families") {
    const std::string combined = std::string(kChannelConfig) + kPowerConfig;
    const Config cfg = Config::parse(combined);
    const CsvDocument doc = run_oracle_command(cfg);
    CHECK(doc.find("-", "-", "se_jammer_channel") != nullptr);
    CHECK(doc.find("-", "-", "se_user_channel_1") != nullptr);
    CHECK(doc.find("-", "-", "se_ewaij") != nullptr);
    CHECK(doc.find("-", "-", "oracle_leader_power") != nullptr);

    const Config empty = Config::parse("[learning]\nepochs = 5\n");
    try {
        run_oracle_command(empty);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.kind() == "missing_field");
    }
}

TEST_CASE("sweep command reads the experiment section") {
    const std::string text = std::string(kChannelConfig) +
                             "[experiment]\n"
                             "kind = sweep\n"
                             "engine = channel-hla\n"
                             "param = jammer_power\n"
                             "values = 15 25\n"
                             "reps = 2\n"
                             "seed = 3\n";
    const Config cfg = Config::parse(text);
    const CsvDocument doc = run_sweep_command(cfg, std::nullopt, std::nullopt);
    REQUIRE(doc.rows.size() == 4);
    CHECK(doc.rows[0].config_param == "jammer_power");
    CHECK(doc.rows[0].config_value == "15");
    CHECK(doc.rows[0].reps == 2);
    // seed override changes the document, reps override changes row counts
    const CsvDocument other = run_sweep_command(cfg, 99, std::nullopt);
    CHECK(doc.to_string() != other.to_string());
}
