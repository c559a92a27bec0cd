#pragma once

#include <vector>

#include "antijam/scenario.hpp"

namespace antijam {

// One pure joint action of the channel-selection game. Channel indices are
// 0-based internally; configs and CSV output use 1-based labels.
struct StrategyProfile {
    std::vector<int> user_channels;  // a_n, size N
    int jammer_channel = 0;          // c_j

    bool operator==(const StrategyProfile&) const = default;
};

// Per-user received interference, jamming, and achievable rate for one profile.
struct RateReport {
    std::vector<double> interference;  // I_n (W)
    std::vector<double> jamming;       // J_n (W)
    std::vector<double> rate;          // R_n (bit/s)
    double sum_rate = 0.0;
};

/// Co-channel indicator: 1 iff the two channel indices are equal.
int co_channel(int a, int b);

/// Expected weighted aggregate interference and jamming. Both orderings of
/// each user pair are counted, plus the power-weighted jamming each user
/// receives on its own channel.
double ewaij(const NetworkScenario& s, const StrategyProfile& p);

/// u_n = L - sum_{m != n} P_n P_m cross(m,n,a_n) [a_m = a_n]
///         - P_n P_j jam(n,c_j) [c_j = a_n].
double user_utility(const NetworkScenario& s, int n, const StrategyProfile& p);

/// u_j = sum_n P_n P_j jam(n,c_j) [c_j = a_n].
double jammer_utility(const NetworkScenario& s, const StrategyProfile& p);

RateReport rates(const NetworkScenario& s, const StrategyProfile& p);

/// Exact potential of the follower game: each user pair counted once, plus
/// the jamming terms, negated. Requires symmetric cross gains; asymmetry
/// beyond 1e-12 relative raises ConfigError("model_violation").
double potential(const NetworkScenario& s, const StrategyProfile& p);

/// All pure profiles with the jammer fixed at c_j from which no user gains by
/// any unilateral channel switch, in lexicographic order. Guarded to
/// M^N <= 1e6 (ConfigError "instance_too_large" beyond that).
std::vector<StrategyProfile> brute_force_nash(const NetworkScenario& s, int c_j);

struct StackelbergSolution {
    int jammer_channel = 0;
    StrategyProfile profile;      // follower equilibrium at that channel
    double jammer_utility = 0.0;
    double ewaij = 0.0;
};

/// Exhaustive leader-follower solution: per jammer channel the followers play
/// the potential-maximizing equilibrium (lexicographically smallest on ties);
/// the jammer picks the channel maximizing its utility at that equilibrium
/// (smallest index on ties). Same size guard as brute_force_nash.
StackelbergSolution brute_force_stackelberg(const NetworkScenario& s);

}  // namespace antijam
