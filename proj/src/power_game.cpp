#include "antijam/power_game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antijam {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr int kLeaderGridPoints = 1000;

// Golden-section maximization on [lo, hi]; assumes a unimodal (here concave)
// objective. Returns the midpoint of the final bracket.
template <typename F>
double golden_section_max(F f, double lo, double hi, double tol) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

EquilibriumReport make_report(double p_s, double p_j, const PowerGameSpec& spec) {
    EquilibriumReport r;
    r.leader_power = p_s;
    r.follower_power = p_j;
    r.user_utility = expected_user_utility(p_s, p_j, spec);
    r.jammer_utility = -expected_sinr(p_s, p_j, spec) - spec.jammer_cost * p_j;
    r.sinr = expected_sinr(p_s, p_j, spec);
    r.rate = expected_rate(p_s, p_j, spec);
    return r;
}

}  // namespace

double DiscreteDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) m += values[i] * probs[i];
    return m;
}

void DiscreteDistribution::validate() const {
    if (values.empty() || values.size() != probs.size()) {
        throw ConfigError("bad_value", "distribution support and probabilities must match and be nonempty");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || values[i] < 0.0) {
            throw ConfigError("bad_value", "distribution support points must be finite and nonnegative");
        }
        if (!(probs[i] >= 0.0)) throw ConfigError("bad_value", "distribution probabilities must be nonnegative");
        total += probs[i];
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw ConfigError("bad_value", "distribution probabilities must sum to 1");
    }
}

void PowerGameSpec::validate() const {
    signal_gain.validate();
    jam_gain.validate();
    if (!(noise_power > 0.0)) throw ConfigError("bad_value", "noise_power must be positive");
    if (!(user_cost > 0.0) || !(jammer_cost > 0.0)) {
        throw ConfigError("bad_value", "cost coefficients must be positive");
    }
    if (!(user_power_cap > 0.0) || !(jammer_power_cap > 0.0)) {
        throw ConfigError("bad_value", "power caps must be positive");
    }
    if (!(observation_error > -1.0)) {
        throw ConfigError("bad_value", "observation_error must be greater than -1");
    }
}

double sinr(double p_s, double p_j, double h_s, double h_j, double noise_power) {
    return p_s * h_s / (noise_power + p_j * h_j);
}

double expected_sinr(double p_s, double p_j, const PowerGameSpec& spec) {
    // Independent priors: E[delta] = p_s E[h_s] E[1 / (sigma^2 + p_j h_j)].
    double inv_denominator = 0.0;
    for (std::size_t k = 0; k < spec.jam_gain.values.size(); ++k) {
        inv_denominator +=
            spec.jam_gain.probs[k] / (spec.noise_power + p_j * spec.jam_gain.values[k]);
    }
    return p_s * spec.signal_gain.mean() * inv_denominator;
}

double expected_user_utility(double p_s, double p_j, const PowerGameSpec& spec) {
    return expected_sinr(p_s, p_j, spec) - spec.user_cost * p_s;
}

double expected_jammer_utility(double p_s_observed, double p_j, const PowerGameSpec& spec) {
    return -expected_sinr(p_s_observed, p_j, spec) - spec.jammer_cost * p_j;
}

double expected_rate(double p_s, double p_j, const PowerGameSpec& spec) {
    double rate = 0.0;
    for (std::size_t i = 0; i < spec.signal_gain.values.size(); ++i) {
        for (std::size_t k = 0; k < spec.jam_gain.values.size(); ++k) {
            const double d = sinr(p_s, p_j, spec.signal_gain.values[i], spec.jam_gain.values[k],
                                  spec.noise_power);
            rate += spec.signal_gain.probs[i] * spec.jam_gain.probs[k] * std::log2(1.0 + d);
        }
    }
    return rate;
}

double jammer_best_response(double p_s_observed, const PowerGameSpec& spec) {
    if (p_s_observed < 0.0) throw std::invalid_argument("observed leader power must be nonnegative");
    const auto objective = [&](double p_j) {
        return expected_jammer_utility(p_s_observed, p_j, spec);
    };
    const double interior = golden_section_max(objective, 0.0, spec.jammer_power_cap, 1e-8);
    double best = 0.0;
    double best_value = objective(0.0);
    for (double candidate : {interior, spec.jammer_power_cap}) {
        const double value = objective(candidate);
        if (value > best_value) {
            best_value = value;
            best = candidate;
        }
    }
    return best;
}

EquilibriumReport leader_optimize(const PowerGameSpec& spec) {
    spec.validate();
    const auto follower = [&](double p_s) {
        return jammer_best_response(p_s * (1.0 + spec.observation_error), spec);
    };
    const auto objective = [&](double p_s) {
        return expected_user_utility(p_s, follower(p_s), spec);
    };

    const double step = spec.user_power_cap / (kLeaderGridPoints - 1);
    int best_index = 0;
    double best_value = objective(0.0);
    for (int i = 1; i < kLeaderGridPoints; ++i) {
        const double value = objective(i * step);
        if (value > best_value) {
            best_value = value;
            best_index = i;
        }
    }
    const double lo = std::max(0.0, (best_index - 1) * step);
    const double hi = std::min(spec.user_power_cap, (best_index + 1) * step);
    const double refined = golden_section_max(objective, lo, hi, 1e-8);

    double p_s = best_index * step;
    if (objective(refined) > best_value) p_s = refined;
    return make_report(p_s, follower(p_s), spec);
}

EquilibriumReport grid_oracle(const PowerGameSpec& spec, int resolution) {
    spec.validate();
    if (resolution < 2) throw ConfigError("bad_value", "grid resolution must be >= 2");
    const double step_s = spec.user_power_cap / (resolution - 1);
    const double step_j = spec.jammer_power_cap / (resolution - 1);
    double best_ps = 0.0, best_pj = 0.0;
    double best_value = 0.0;
    bool first = true;
    for (int i = 0; i < resolution; ++i) {
        const double p_s = i * step_s;
        const double observed = p_s * (1.0 + spec.observation_error);
        const auto follower_objective = [&](double p_j) {
            return expected_jammer_utility(observed, p_j, spec);
        };
        double inner_pj = 0.0;
        double inner_value = follower_objective(0.0);
        for (int k = 1; k < resolution; ++k) {
            const double p_j = k * step_j;
            const double value = follower_objective(p_j);
            if (value > inner_value) {
                inner_value = value;
                inner_pj = p_j;
            }
        }
        // The leader utility is not flat in p_j at the follower's optimum, so
        // half a grid step of follower error would dominate the comparison
        // against the adaptive solver. Polish within the winning bracket.
        const double refined =
            golden_section_max(follower_objective, std::max(0.0, inner_pj - step_j),
                               std::min(spec.jammer_power_cap, inner_pj + step_j), 1e-8);
        if (follower_objective(refined) > inner_value) inner_pj = refined;
        const double leader_value = expected_user_utility(p_s, inner_pj, spec);
        if (first || leader_value > best_value) {
            first = false;
            best_value = leader_value;
            best_ps = p_s;
            best_pj = inner_pj;
        }
    }
    return make_report(best_ps, best_pj, spec);
}

EquilibriumReport average_game_baseline(const PowerGameSpec& spec) {
    spec.validate();
    PowerGameSpec surrogate = spec;
    surrogate.signal_gain = DiscreteDistribution::point(spec.signal_gain.mean());
    surrogate.jam_gain = DiscreteDistribution::point(spec.jam_gain.mean());
    const EquilibriumReport surrogate_solution = leader_optimize(surrogate);
    // The real jammer still best-responds with its true information; only the
    // leader's modeling changed. Evaluate that pair under the true priors.
    const double p_s = surrogate_solution.leader_power;
    const double p_j = jammer_best_response(p_s * (1.0 + spec.observation_error), spec);
    return make_report(p_s, p_j, spec);
}

}  // namespace antijam
