#pragma once

#include <vector>

#include "antijam/config.hpp"

namespace antijam {

// Finite-support prior over a channel gain. Expectations are exact sums.
struct DiscreteDistribution {
    std::vector<double> values;
    std::vector<double> probs;

    static DiscreteDistribution point(double v) { return {{v}, {1.0}}; }
    double mean() const;
    void validate() const;  // probs >= 0 summing to 1 within 1e-12, values finite and >= 0
};

// One user (transmitter-receiver pair) against one jammer, incomplete
// information carried by the gain priors, observation error applied to the
// jammer's view of the user's transmit power.
struct PowerGameSpec {
    DiscreteDistribution signal_gain;  // h_s
    DiscreteDistribution jam_gain;     // h_j
    double noise_power = 1.0;          // sigma^2 (W)
    double user_cost = 0.1;            // C_s, utility per W
    double jammer_cost = 0.1;          // C_j, utility per W
    double user_power_cap = 10.0;      // P_s^max (W)
    double jammer_power_cap = 10.0;    // P_j^max (W)
    double observation_error = 0.0;    // epsilon; the jammer observes p_s (1 + epsilon)

    void validate() const;
};

struct EquilibriumReport {
    double leader_power = 0.0;    // p_s (W)
    double follower_power = 0.0;  // p_j (W)
    double user_utility = 0.0;    // E[delta] - C_s p_s at the true leader power
    double jammer_utility = 0.0;  // -E[delta] - C_j p_j at the true leader power
    double sinr = 0.0;            // E[delta]
    double rate = 0.0;            // E[log2(1 + delta)] over the joint gain support
};

/// delta = p_s h_s / (sigma^2 + p_j h_j).
double sinr(double p_s, double p_j, double h_s, double h_j, double noise_power);

double expected_sinr(double p_s, double p_j, const PowerGameSpec& spec);
double expected_user_utility(double p_s, double p_j, const PowerGameSpec& spec);
/// Jammer objective under its observation of the leader power.
double expected_jammer_utility(double p_s_observed, double p_j, const PowerGameSpec& spec);
double expected_rate(double p_s, double p_j, const PowerGameSpec& spec);

/// argmax over [0, P_j^max] of the jammer objective; golden-section search
/// (1e-8 power tolerance) on the concave objective, endpoints compared
/// exactly. Throws std::invalid_argument on a negative observation.
double jammer_best_response(double p_s_observed, const PowerGameSpec& spec);

/// Backward induction: the leader maximizes its expected utility against the
/// follower best response to the distorted observation. 1000-point coarse
/// grid over [0, P_s^max] plus golden-section refinement of the best bracket.
EquilibriumReport leader_optimize(const PowerGameSpec& spec);

/// Independent verification path: exhaustive double grid over (p_s, p_j),
/// inner follower argmax per leader power, outer leader argmax.
EquilibriumReport grid_oracle(const PowerGameSpec& spec, int resolution);

/// Baseline that solves the game with every prior collapsed to its mean, then
/// reports the surrogate leader power played against the true-information
/// follower, evaluated under the true priors.
EquilibriumReport average_game_baseline(const PowerGameSpec& spec);

}  // namespace antijam
