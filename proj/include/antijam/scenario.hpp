#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antijam/config.hpp"
#include "antijam/rng.hpp"

namespace antijam {

// Random placement model used when a config does not list gains explicitly:
// uniform positions in a square area, log-distance path loss, flat across
// channels.
struct TopologySpec {
    double area = 50.0;              // side length of the square region (m)
    double path_loss_exponent = 2.0; // alpha
    double reference_gain = 1.0;     // linear gain at 1 m
    double link_distance_min = 1.0;  // TX-RX separation bounds per user (m)
    double link_distance_max = 3.0;

    void validate() const;  // throws ConfigError on nonsense values
};

// The network world for the channel-selection game: N users (transceiver
// pairs), one jammer, M channels, expected link gains, and the utility
// constant L that keeps every user utility in [0, L].
struct NetworkScenario {
    int num_users = 0;
    int num_channels = 0;
    std::vector<double> user_power;   // P_n (W), size N
    double jammer_power = 0.0;        // P_j (W)
    std::vector<double> cross_gain;   // expected gain user m -> user n, N*N*M, diagonal zero
    std::vector<double> jam_gain;     // expected gain jammer -> user n, N*M
    std::vector<double> direct_gain;  // desired-link gain of user n, N*M
    double bandwidth = 0.0;           // B (Hz)
    double noise_density = 0.0;       // N0 (W/Hz)
    double utility_constant = 0.0;    // L

    double cross(int m, int n, int c) const {
        return cross_gain[(static_cast<std::size_t>(m) * num_users + n) * num_channels + c];
    }
    double jam(int n, int c) const {
        return jam_gain[static_cast<std::size_t>(n) * num_channels + c];
    }
    double direct(int n, int c) const {
        return direct_gain[static_cast<std::size_t>(n) * num_channels + c];
    }
    void set_cross(int m, int n, int c, double v) {
        cross_gain[(static_cast<std::size_t>(m) * num_users + n) * num_channels + c] = v;
    }
    void set_jam(int n, int c, double v) {
        jam_gain[static_cast<std::size_t>(n) * num_channels + c] = v;
    }
    void set_direct(int n, int c, double v) {
        direct_gain[static_cast<std::size_t>(n) * num_channels + c] = v;
    }

    /// Allocates zeroed gain tensors for the given counts.
    void allocate(int n_users, int n_channels);
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Node positions behind a generated scenario. The jammer is drawn first so
// that growing num_users extends a placement instead of reshuffling it.
struct Placement {
    Point jammer;
    std::vector<Point> tx;  // per-user transmitter
    std::vector<Point> rx;  // per-user receiver
};

/// reference_gain * clamp(d, 1 m)^-alpha.
double path_loss_gain(double distance_m, const TopologySpec& topo);

Placement draw_placement(const TopologySpec& topo, int n_users, Rng& rng);

/// Builds a scenario from explicit node positions. Cross gains are the mean
/// of the two directed path gains, so they are symmetric by construction.
/// L is set to 1.1 x the analytic worst-case bound (1.0 if the bound is zero).
NetworkScenario scenario_from_placement(const TopologySpec& topo, const Placement& placement,
                                        int n_channels, const std::vector<double>& user_power,
                                        double jammer_power, double bandwidth, double noise_density);

/// Random scenario: draw_placement + scenario_from_placement. user_power may
/// have size 1 (broadcast to all users) or size n_users.
NetworkScenario generate_scenario(const TopologySpec& topo, int n_users, int n_channels,
                                  const std::vector<double>& user_power, double jammer_power,
                                  double bandwidth, double noise_density, std::uint64_t seed);

/// max over users of sum_{m != n} P_n P_m max_c cross(m,n,c) + P_n P_j max_c jam(n,c).
/// Every utility is in [0, L] iff L is at least this value.
double analytic_utility_bound(const NetworkScenario& s);

/// Throws ConfigError (kinds: bad_value, utility_constant_too_small) on
/// invariant violations.
void validate_scenario(const NetworkScenario& s);

/// Parses a scenario from config text; explicit gain mode if direct_gain_1 is
/// present in [network], otherwise [topology] + seed is expanded through
/// generate_scenario. Applies validate_scenario.
NetworkScenario load_scenario(const std::string& config_text);
NetworkScenario load_scenario(const Config& cfg);

/// Like load_scenario but, for topology-mode configs, uses seed_override
/// instead of [topology] seed when given. Experiment replications use this.
NetworkScenario scenario_from_config(const Config& cfg, std::optional<std::uint64_t> seed_override);

/// Explicit-gain config text that load_scenario maps back to an equal scenario.
std::string serialize_scenario(const NetworkScenario& s);

/// Exact field-by-field equality.
bool scenario_equal(const NetworkScenario& a, const NetworkScenario& b);

}  // namespace antijam
