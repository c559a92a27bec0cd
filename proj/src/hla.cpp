#include "antijam/hla.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antijam {

namespace {

int sample_channel(const MixedStrategy& q, Rng& rng) {
    const double u = rng.uniform();
    double cum = 0.0;
    for (std::size_t c = 0; c < q.size(); ++c) {
        cum += q[c];
        if (u < cum) return static_cast<int>(c);
    }
    return static_cast<int>(q.size()) - 1;  // guard against rounding of the cumsum
}

int argmax_strategy(const MixedStrategy& q) {
    return static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
}

enum class UserPolicy { Sla, UniformRandom };

Trajectory run_loop(const NetworkScenario& s, const LearningParams& params, std::uint64_t seed,
                    UserPolicy policy) {
    params.validate();
    validate_scenario(s);
    const int n_users = s.num_users;
    const int n_channels = s.num_channels;
    const double l = s.utility_constant;
    Rng rng(seed);

    std::vector<MixedStrategy> strategies(n_users,
                                          MixedStrategy(n_channels, 1.0 / n_channels));
    QTable q(n_channels, jammer_utility_bound(s));
    double epsilon = params.epsilon0;

    Trajectory traj;
    traj.epochs.reserve(params.epochs);
    StrategyProfile profile{std::vector<int>(n_users, 0), 0};

    for (int epoch = 0; epoch < params.epochs; ++epoch) {
        const int c_j = jammer_select(q, epsilon, rng);
        profile.jammer_channel = c_j;

        EpochRecord rec;
        rec.jammer_channel = c_j;
        rec.user_rates.assign(n_users, 0.0);
        double jammer_reward_sum = 0.0;

        for (int slot = 0; slot < params.slots_per_epoch; ++slot) {
            for (int n = 0; n < n_users; ++n) {
                profile.user_channels[n] = policy == UserPolicy::Sla
                                               ? sample_channel(strategies[n], rng)
                                               : rng.below_int(n_channels);
            }

            rec.ewaij += ewaij(s, profile);
            const RateReport rr = rates(s, profile);
            rec.sum_rate += rr.sum_rate;
            for (int n = 0; n < n_users; ++n) rec.user_rates[n] += rr.rate[n];
            jammer_reward_sum += jammer_utility(s, profile);

            if (policy == UserPolicy::Sla) {
                for (int n = 0; n < n_users; ++n) {
                    const double u = user_utility(s, n, profile);
                    if (u < 0.0 || u > l) ++traj.reward_clamp_events;
                    strategies[n] = sla_update(strategies[n], profile.user_channels[n],
                                               normalize_reward(u, l), params.sla_step);
                    ++traj.sla_updates;
                }
            }
        }

        const double inv_k = 1.0 / params.slots_per_epoch;
        rec.ewaij *= inv_k;
        rec.sum_rate *= inv_k;
        for (double& r : rec.user_rates) r *= inv_k;
        rec.jammer_utility = jammer_reward_sum * inv_k;
        rec.strategies = strategies;

        q = q_update(q, c_j, rec.jammer_utility, params.q_learning_rate);
        ++traj.q_updates;
        epsilon = std::max(epsilon * params.epsilon_decay, params.epsilon_floor);

        traj.epochs.push_back(std::move(rec));
    }

    traj.final_profile.user_channels.resize(n_users);
    traj.converged = true;
    for (int n = 0; n < n_users; ++n) {
        traj.final_profile.user_channels[n] = argmax_strategy(strategies[n]);
        if (strategies[n][traj.final_profile.user_channels[n]] < 0.99) traj.converged = false;
    }
    if (policy == UserPolicy::UniformRandom) traj.converged = false;
    traj.final_profile.jammer_channel = traj.epochs.back().jammer_channel;
    traj.final_q = q;
    return traj;
}

}  // namespace

void LearningParams::validate() const {
    if (!(sla_step > 0.0 && sla_step < 1.0)) throw ConfigError("bad_value", "sla_step must be in (0, 1)");
    if (!(q_learning_rate > 0.0 && q_learning_rate <= 1.0)) {
        throw ConfigError("bad_value", "q_learning_rate must be in (0, 1]");
    }
    if (!(epsilon0 >= 0.0 && epsilon0 <= 1.0)) throw ConfigError("bad_value", "epsilon0 must be in [0, 1]");
    if (!(epsilon_decay > 0.0 && epsilon_decay <= 1.0)) {
        throw ConfigError("bad_value", "epsilon_decay must be in (0, 1]");
    }
    if (!(epsilon_floor >= 0.0 && epsilon_floor <= 1.0)) {
        throw ConfigError("bad_value", "epsilon_floor must be in [0, 1]");
    }
    if (slots_per_epoch < 1) throw ConfigError("bad_value", "slots_per_epoch must be >= 1");
    if (epochs < 1) throw ConfigError("bad_value", "epochs must be >= 1");
}

MixedStrategy sla_update(const MixedStrategy& q, int chosen, double reward_norm, double step) {
    if (chosen < 0 || chosen >= static_cast<int>(q.size())) {
        throw std::out_of_range("chosen channel out of range");
    }
    const double r = std::clamp(reward_norm, 0.0, 1.0);
    MixedStrategy out(q.size());
    for (std::size_t c = 0; c < q.size(); ++c) {
        out[c] = static_cast<int>(c) == chosen ? q[c] + step * r * (1.0 - q[c])
                                               : q[c] - step * r * q[c];
    }
    double total = 0.0;
    for (double& v : out) {
        v = std::max(v, 0.0);
        total += v;
    }
    for (double& v : out) v /= total;
    return out;
}

double normalize_reward(double utility, double utility_constant) {
    return std::clamp(utility / utility_constant, 0.0, 1.0);
}

QTable q_update(const QTable& q, int chosen, double reward, double alpha) {
    if (chosen < 0 || chosen >= static_cast<int>(q.size())) {
        throw std::out_of_range("chosen channel out of range");
    }
    QTable out = q;
    out[chosen] = (1.0 - alpha) * q[chosen] + alpha * reward;
    return out;
}

int jammer_select(const QTable& q, double epsilon, Rng& rng) {
    if (q.empty()) throw std::out_of_range("empty Q table");
    if (rng.uniform() < epsilon) return rng.below_int(static_cast<int>(q.size()));
    return static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
}

double jammer_utility_bound(const NetworkScenario& s) {
    double bound = 0.0;
    for (int n = 0; n < s.num_users; ++n) {
        double g = 0.0;
        for (int c = 0; c < s.num_channels; ++c) g = std::max(g, s.jam(n, c));
        bound += s.user_power[n] * s.jammer_power * g;
    }
    return bound;
}

Trajectory hla_run(const NetworkScenario& s, const LearningParams& params, std::uint64_t seed) {
    return run_loop(s, params, seed, UserPolicy::Sla);
}

Trajectory random_baseline_run(const NetworkScenario& s, const LearningParams& params,
                               std::uint64_t seed) {
    return run_loop(s, params, seed, UserPolicy::UniformRandom);
}

}  // namespace antijam
