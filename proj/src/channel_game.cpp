#include "antijam/channel_game.hpp"

#include <cmath>
#include <stdexcept>

namespace antijam {

namespace {

void check_profile(const NetworkScenario& s, const StrategyProfile& p) {
    if (static_cast<int>(p.user_channels.size()) != s.num_users) {
        throw std::out_of_range("profile size does not match num_users");
    }
    for (int a : p.user_channels) {
        if (a < 0 || a >= s.num_channels) throw std::out_of_range("user channel index out of range");
    }
    if (p.jammer_channel < 0 || p.jammer_channel >= s.num_channels) {
        throw std::out_of_range("jammer channel index out of range");
    }
}

// Interference + jamming received by user n, weighted by P_n (the quantity
// subtracted from L in its utility).
double received_weight(const NetworkScenario& s, const std::vector<int>& a, int c_j, int n) {
    const int ch = a[n];
    double w = 0.0;
    for (int m = 0; m < s.num_users; ++m) {
        if (m == n || a[m] != ch) continue;
        w += s.user_power[n] * s.user_power[m] * s.cross(m, n, ch);
    }
    if (c_j == ch) w += s.user_power[n] * s.jammer_power * s.jam(n, c_j);
    return w;
}

void check_symmetry(const NetworkScenario& s) {
    for (int m = 0; m < s.num_users; ++m) {
        for (int n = m + 1; n < s.num_users; ++n) {
            for (int c = 0; c < s.num_channels; ++c) {
                const double a = s.cross(m, n, c);
                const double b = s.cross(n, m, c);
                if (std::fabs(a - b) > 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)})) {
                    throw ConfigError("model_violation",
                                      "cross gains are asymmetric; the potential function is undefined");
                }
            }
        }
    }
}

void check_size_guard(const NetworkScenario& s) {
    double profiles = 1.0;
    for (int n = 0; n < s.num_users; ++n) profiles *= s.num_channels;
    if (profiles > 1e6) {
        throw ConfigError("instance_too_large",
                          "M^N exceeds 1e6 profiles; brute force enumeration refused");
    }
}

// Lexicographic odometer over user channels; index 0 is most significant.
bool next_profile(std::vector<int>& a, int n_channels) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (++a[i] < n_channels) return true;
        a[i] = 0;
    }
    return false;
}

bool is_nash(const NetworkScenario& s, StrategyProfile& p) {
    for (int n = 0; n < s.num_users; ++n) {
        const int original = p.user_channels[n];
        const double u = user_utility(s, n, p);
        for (int c = 0; c < s.num_channels; ++c) {
            if (c == original) continue;
            p.user_channels[n] = c;
            const double u_dev = user_utility(s, n, p);
            p.user_channels[n] = original;
            if (u_dev > u) return false;
        }
    }
    return true;
}

}  // namespace

int co_channel(int a, int b) {
    return a == b ? 1 : 0;
}

double ewaij(const NetworkScenario& s, const StrategyProfile& p) {
    check_profile(s, p);
    double total = 0.0;
    for (int n = 0; n < s.num_users; ++n) {
        total += received_weight(s, p.user_channels, p.jammer_channel, n);
    }
    return total;
}

double user_utility(const NetworkScenario& s, int n, const StrategyProfile& p) {
    if (n < 0 || n >= s.num_users) throw std::out_of_range("user index out of range");
    check_profile(s, p);
    return s.utility_constant - received_weight(s, p.user_channels, p.jammer_channel, n);
}

double jammer_utility(const NetworkScenario& s, const StrategyProfile& p) {
    check_profile(s, p);
    double total = 0.0;
    for (int n = 0; n < s.num_users; ++n) {
        if (p.user_channels[n] == p.jammer_channel) {
            total += s.user_power[n] * s.jammer_power * s.jam(n, p.jammer_channel);
        }
    }
    return total;
}

RateReport rates(const NetworkScenario& s, const StrategyProfile& p) {
    check_profile(s, p);
    RateReport r;
    r.interference.resize(s.num_users);
    r.jamming.resize(s.num_users);
    r.rate.resize(s.num_users);
    const double noise = s.bandwidth * s.noise_density;
    for (int n = 0; n < s.num_users; ++n) {
        const int ch = p.user_channels[n];
        double interference = 0.0;
        for (int m = 0; m < s.num_users; ++m) {
            if (m == n || p.user_channels[m] != ch) continue;
            interference += s.user_power[m] * s.cross(m, n, ch);
        }
        const double jamming = p.jammer_channel == ch ? s.jammer_power * s.jam(n, ch) : 0.0;
        const double sinr = s.user_power[n] * s.direct(n, ch) / (noise + interference + jamming);
        r.interference[n] = interference;
        r.jamming[n] = jamming;
        r.rate[n] = s.bandwidth * std::log2(1.0 + sinr);
        r.sum_rate += r.rate[n];
    }
    return r;
}

double potential(const NetworkScenario& s, const StrategyProfile& p) {
    check_profile(s, p);
    check_symmetry(s);
    double phi = 0.0;
    for (int m = 0; m < s.num_users; ++m) {
        for (int n = m + 1; n < s.num_users; ++n) {
            if (p.user_channels[m] != p.user_channels[n]) continue;
            phi -= s.user_power[m] * s.user_power[n] * s.cross(m, n, p.user_channels[n]);
        }
    }
    for (int n = 0; n < s.num_users; ++n) {
        if (p.user_channels[n] == p.jammer_channel) {
            phi -= s.user_power[n] * s.jammer_power * s.jam(n, p.jammer_channel);
        }
    }
    return phi;
}

std::vector<StrategyProfile> brute_force_nash(const NetworkScenario& s, int c_j) {
    if (c_j < 0 || c_j >= s.num_channels) throw std::out_of_range("jammer channel index out of range");
    check_size_guard(s);
    std::vector<StrategyProfile> equilibria;
    StrategyProfile p{std::vector<int>(s.num_users, 0), c_j};
    do {
        if (is_nash(s, p)) equilibria.push_back(p);
    } while (next_profile(p.user_channels, s.num_channels));
    return equilibria;
}

StackelbergSolution brute_force_stackelberg(const NetworkScenario& s) {
    check_size_guard(s);
    StackelbergSolution best;
    bool have_best = false;
    for (int c_j = 0; c_j < s.num_channels; ++c_j) {
        // Lexicographic scan + strict improvement keeps the lexicographically
        // smallest potential maximizer, which is a Nash equilibrium of the
        // follower game by the exact potential property.
        StrategyProfile p{std::vector<int>(s.num_users, 0), c_j};
        StrategyProfile arg = p;
        double best_phi = potential(s, p);
        while (next_profile(p.user_channels, s.num_channels)) {
            const double phi = potential(s, p);
            if (phi > best_phi) {
                best_phi = phi;
                arg = p;
            }
        }
        const double u_j = jammer_utility(s, arg);
        if (!have_best || u_j > best.jammer_utility) {
            best.jammer_channel = c_j;
            best.profile = arg;
            best.jammer_utility = u_j;
            best.ewaij = ewaij(s, arg);
            have_best = true;
        }
    }
    return best;
}

}  // namespace antijam
