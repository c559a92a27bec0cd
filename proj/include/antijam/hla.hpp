#pragma once

#include <cstdint>
#include <vector>

#include "antijam/channel_game.hpp"
#include "antijam/rng.hpp"
#include "antijam/scenario.hpp"

namespace antijam {

// Channel-selection probabilities of one user (a point on the simplex).
using MixedStrategy = std::vector<double>;
// Stateless action values of the jammer, one entry per channel.
using QTable = std::vector<double>;

struct LearningParams {
    double sla_step = 0.05;        // b, in (0, 1)
    double q_learning_rate = 0.5;  // alpha, in (0, 1]
    double epsilon0 = 0.3;         // initial exploration probability
    double epsilon_decay = 0.98;   // multiplicative, per epoch
    double epsilon_floor = 0.01;
    int slots_per_epoch = 50;      // K
    int epochs = 200;              // E

    void validate() const;  // throws ConfigError("bad_value") on range violations
};

struct EpochRecord {
    double ewaij = 0.0;            // mean over the epoch's slots
    double sum_rate = 0.0;         // mean over slots
    std::vector<double> user_rates;  // per-user means over slots
    double jammer_utility = 0.0;   // mean over slots (the jammer's epoch reward)
    int jammer_channel = 0;
    std::vector<MixedStrategy> strategies;  // per-user, snapshot at epoch end
};

struct Trajectory {
    std::vector<EpochRecord> epochs;
    StrategyProfile final_profile;  // per-user argmax strategy + last jammer channel
    bool converged = false;         // every user has max probability >= 0.99
    QTable final_q;
    long long sla_updates = 0;      // total sla_update applications (E*K*N)
    long long q_updates = 0;        // E
    long long reward_clamp_events = 0;  // nonzero signals a miscalibrated L
};

/// Linear reward-inaction update: the chosen channel moves toward 1 by
/// b * reward_norm, all others shrink proportionally. Renormalized on exit.
MixedStrategy sla_update(const MixedStrategy& q, int chosen, double reward_norm, double step);

/// u / L clamped to [0, 1].
double normalize_reward(double utility, double utility_constant);

/// Q'(chosen) = (1 - alpha) Q(chosen) + alpha * reward; other entries unchanged.
QTable q_update(const QTable& q, int chosen, double reward, double alpha);

/// Epsilon-greedy: uniform random channel with probability epsilon, otherwise
/// argmax with smallest-index tie-break.
int jammer_select(const QTable& q, double epsilon, Rng& rng);

/// Upper bound on the jammer utility; the Q table is initialized to this so a
/// greedy jammer still visits every channel at least once.
double jammer_utility_bound(const NetworkScenario& s);

/// The hierarchical run: per epoch the jammer picks a channel and holds it
/// for K slots; per slot every user samples its channel, utilities are
/// computed from the realized joint profile, and each user applies the SLA
/// update on its normalized utility. At the epoch end the jammer's Q entry is
/// updated with its mean utility over the epoch and epsilon decays.
/// Deterministic given the seed.
Trajectory hla_run(const NetworkScenario& s, const LearningParams& params, std::uint64_t seed);

/// Baseline with the identical jammer but users picking uniform random
/// channels each slot. Same epoch/slot structure and trajectory schema, so
/// the comparison isolates the user policy.
Trajectory random_baseline_run(const NetworkScenario& s, const LearningParams& params,
                               std::uint64_t seed);

}  // namespace antijam
