#include "antijam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace antijam {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void check_powers(const std::vector<double>& user_power, double jammer_power) {
    if (user_power.empty()) throw ConfigError("bad_value", "user_power list is empty");
    for (double p : user_power) {
        if (!(p > 0.0)) throw ConfigError("bad_value", "user_power entries must be positive");
    }
    if (!(jammer_power > 0.0)) throw ConfigError("bad_value", "jammer_power must be positive");
}

std::vector<double> broadcast_powers(const std::vector<double>& user_power, int n_users) {
    if (static_cast<int>(user_power.size()) == n_users) return user_power;
    if (user_power.size() == 1) return std::vector<double>(n_users, user_power[0]);
    throw ConfigError("bad_value", "user_power must have 1 or num_users entries");
}

}  // namespace

void TopologySpec::validate() const {
    if (!(area > 0.0)) throw ConfigError("bad_value", "[topology] area must be positive");
    if (!(path_loss_exponent >= 1.0)) {
        throw ConfigError("bad_value", "[topology] path_loss_exponent must be >= 1");
    }
    if (!(reference_gain > 0.0)) throw ConfigError("bad_value", "[topology] reference_gain must be positive");
    if (!(link_distance_min > 0.0) || !(link_distance_max >= link_distance_min)) {
        throw ConfigError("bad_value", "[topology] link distance bounds must satisfy 0 < min <= max");
    }
}

void NetworkScenario::allocate(int n_users, int n_channels) {
    num_users = n_users;
    num_channels = n_channels;
    cross_gain.assign(static_cast<std::size_t>(n_users) * n_users * n_channels, 0.0);
    jam_gain.assign(static_cast<std::size_t>(n_users) * n_channels, 0.0);
    direct_gain.assign(static_cast<std::size_t>(n_users) * n_channels, 0.0);
}

double path_loss_gain(double distance_m, const TopologySpec& topo) {
    const double d = std::max(distance_m, 1.0);  // clamp before the power law
    return topo.reference_gain * std::pow(d, -topo.path_loss_exponent);
}

Placement draw_placement(const TopologySpec& topo, int n_users, Rng& rng) {
    Placement p;
    p.jammer = {rng.uniform(0.0, topo.area), rng.uniform(0.0, topo.area)};
    p.tx.reserve(n_users);
    p.rx.reserve(n_users);
    for (int n = 0; n < n_users; ++n) {
        const Point tx{rng.uniform(0.0, topo.area), rng.uniform(0.0, topo.area)};
        const double angle = rng.uniform(0.0, 2.0 * kPi);
        const double link = rng.uniform(topo.link_distance_min, topo.link_distance_max);
        p.tx.push_back(tx);
        p.rx.push_back(Point{tx.x + link * std::cos(angle), tx.y + link * std::sin(angle)});
    }
    return p;
}

NetworkScenario scenario_from_placement(const TopologySpec& topo, const Placement& placement,
                                        int n_channels, const std::vector<double>& user_power,
                                        double jammer_power, double bandwidth, double noise_density) {
    topo.validate();
    const int n_users = static_cast<int>(placement.tx.size());
    if (n_users < 1) throw ConfigError("bad_value", "num_users must be >= 1");
    if (n_channels < 2) throw ConfigError("bad_value", "num_channels must be >= 2");
    check_powers(user_power, jammer_power);
    if (!(bandwidth > 0.0)) throw ConfigError("bad_value", "bandwidth must be positive");
    if (!(noise_density > 0.0)) throw ConfigError("bad_value", "noise_density must be positive");

    NetworkScenario s;
    s.allocate(n_users, n_channels);
    s.user_power = broadcast_powers(user_power, n_users);
    s.jammer_power = jammer_power;
    s.bandwidth = bandwidth;
    s.noise_density = noise_density;

    // Flat expected fading: the same gain on every channel.
    for (int n = 0; n < n_users; ++n) {
        const double g_direct = path_loss_gain(dist(placement.tx[n], placement.rx[n]), topo);
        const double g_jam = path_loss_gain(dist(placement.jammer, placement.rx[n]), topo);
        for (int c = 0; c < n_channels; ++c) {
            s.set_direct(n, c, g_direct);
            s.set_jam(n, c, g_jam);
        }
    }
    for (int m = 0; m < n_users; ++m) {
        for (int n = m + 1; n < n_users; ++n) {
            const double g = 0.5 * (path_loss_gain(dist(placement.tx[m], placement.rx[n]), topo) +
                                    path_loss_gain(dist(placement.tx[n], placement.rx[m]), topo));
            for (int c = 0; c < n_channels; ++c) {
                s.set_cross(m, n, c, g);
                s.set_cross(n, m, c, g);
            }
        }
    }

    const double bound = analytic_utility_bound(s);
    s.utility_constant = bound > 0.0 ? 1.1 * bound : 1.0;
    validate_scenario(s);
    return s;
}

NetworkScenario generate_scenario(const TopologySpec& topo, int n_users, int n_channels,
                                  const std::vector<double>& user_power, double jammer_power,
                                  double bandwidth, double noise_density, std::uint64_t seed) {
    topo.validate();
    if (n_users < 1) throw ConfigError("bad_value", "num_users must be >= 1");
    if (n_channels < 2) throw ConfigError("bad_value", "num_channels must be >= 2");
    check_powers(user_power, jammer_power);
    Rng rng(seed);
    const Placement placement = draw_placement(topo, n_users, rng);
    return scenario_from_placement(topo, placement, n_channels, user_power, jammer_power,
                                   bandwidth, noise_density);
}

double analytic_utility_bound(const NetworkScenario& s) {
    double bound = 0.0;
    for (int n = 0; n < s.num_users; ++n) {
        double worst = 0.0;
        for (int m = 0; m < s.num_users; ++m) {
            if (m == n) continue;
            double g = 0.0;
            for (int c = 0; c < s.num_channels; ++c) g = std::max(g, s.cross(m, n, c));
            worst += s.user_power[n] * s.user_power[m] * g;
        }
        double gj = 0.0;
        for (int c = 0; c < s.num_channels; ++c) gj = std::max(gj, s.jam(n, c));
        worst += s.user_power[n] * s.jammer_power * gj;
        bound = std::max(bound, worst);
    }
    return bound;
}

void validate_scenario(const NetworkScenario& s) {
    if (s.num_users < 1) throw ConfigError("bad_value", "num_users must be >= 1");
    if (s.num_channels < 2) throw ConfigError("bad_value", "num_channels must be >= 2");
    if (static_cast<int>(s.user_power.size()) != s.num_users) {
        throw ConfigError("bad_value", "user_power size does not match num_users");
    }
    check_powers(s.user_power, s.jammer_power);
    if (!(s.bandwidth > 0.0)) throw ConfigError("bad_value", "bandwidth must be positive");
    if (!(s.noise_density > 0.0)) throw ConfigError("bad_value", "noise_density must be positive");
    const std::size_t nn = static_cast<std::size_t>(s.num_users);
    const std::size_t mm = static_cast<std::size_t>(s.num_channels);
    if (s.cross_gain.size() != nn * nn * mm || s.jam_gain.size() != nn * mm ||
        s.direct_gain.size() != nn * mm) {
        throw ConfigError("bad_value", "gain tensor sizes do not match counts");
    }
    for (double g : s.cross_gain) {
        if (!(g >= 0.0) || !std::isfinite(g)) throw ConfigError("bad_value", "cross gains must be finite and nonnegative");
    }
    for (int n = 0; n < s.num_users; ++n) {
        for (int c = 0; c < s.num_channels; ++c) {
            if (s.cross(n, n, c) != 0.0) throw ConfigError("bad_value", "cross gain diagonal must be zero");
            if (!(s.jam(n, c) >= 0.0) || !std::isfinite(s.jam(n, c))) {
                throw ConfigError("bad_value", "jam gains must be finite and nonnegative");
            }
            if (!(s.direct(n, c) > 0.0) || !std::isfinite(s.direct(n, c))) {
                throw ConfigError("bad_value", "direct gains must be finite and positive");
            }
        }
    }
    if (!(s.utility_constant > 0.0)) throw ConfigError("bad_value", "utility_constant must be positive");
    const double bound = analytic_utility_bound(s);
    if (s.utility_constant < bound * (1.0 - 1e-12)) {
        throw ConfigError("utility_constant_too_small",
                          "utility_constant " + fmt_full(s.utility_constant) +
                              " is below the analytic worst-case bound " + fmt_full(bound));
    }
}

namespace {

NetworkScenario load_explicit(const Config& cfg, int n_users, int n_channels,
                              const std::vector<double>& user_power, double jammer_power,
                              double bandwidth, double noise_density) {
    NetworkScenario s;
    s.allocate(n_users, n_channels);
    s.user_power = broadcast_powers(user_power, n_users);
    s.jammer_power = jammer_power;
    s.bandwidth = bandwidth;
    s.noise_density = noise_density;

    auto read_row = [&](const std::string& key) {
        const std::vector<double> row = cfg.get_doubles("network", key);
        if (static_cast<int>(row.size()) != n_channels) {
            throw ConfigError("bad_value", "[network] " + key + " must list num_channels gains");
        }
        return row;
    };

    for (int n = 0; n < n_users; ++n) {
        const std::string suffix = std::to_string(n + 1);
        const auto direct = read_row("direct_gain_" + suffix);
        const auto jam = read_row("jam_gain_" + suffix);
        for (int c = 0; c < n_channels; ++c) {
            s.set_direct(n, c, direct[c]);
            s.set_jam(n, c, jam[c]);
        }
    }
    for (int m = 0; m < n_users; ++m) {
        for (int n = m + 1; n < n_users; ++n) {
            const std::string fwd = "cross_gain_" + std::to_string(m + 1) + "_" + std::to_string(n + 1);
            const std::string rev = "cross_gain_" + std::to_string(n + 1) + "_" + std::to_string(m + 1);
            const bool has_fwd = cfg.has("network", fwd);
            const bool has_rev = cfg.has("network", rev);
            if (!has_fwd && !has_rev) throw ConfigError("missing_field", "[network] " + fwd);
            std::vector<double> row;
            if (has_fwd) row = read_row(fwd);
            if (has_rev) {
                const auto rev_row = read_row(rev);
                if (has_fwd) {
                    for (int c = 0; c < n_channels; ++c) {
                        const double scale = std::max({1.0, std::fabs(row[c]), std::fabs(rev_row[c])});
                        if (std::fabs(row[c] - rev_row[c]) > 1e-12 * scale) {
                            throw ConfigError("asymmetric_cross_gain",
                                              "[network] " + fwd + " and " + rev + " disagree");
                        }
                    }
                } else {
                    row = rev_row;
                }
            }
            for (int c = 0; c < n_channels; ++c) {
                s.set_cross(m, n, c, row[c]);
                s.set_cross(n, m, c, row[c]);
            }
        }
    }

    const std::string l_text = cfg.get_string_or("network", "utility_constant", "auto");
    const double bound = analytic_utility_bound(s);
    if (l_text == "auto") {
        s.utility_constant = bound > 0.0 ? 1.1 * bound : 1.0;
    } else {
        s.utility_constant = cfg.get_double("network", "utility_constant");
    }
    validate_scenario(s);
    return s;
}

}  // namespace

NetworkScenario scenario_from_config(const Config& cfg, std::optional<std::uint64_t> seed_override) {
    const int n_users = static_cast<int>(cfg.get_int("network", "num_users"));
    const int n_channels = static_cast<int>(cfg.get_int("network", "num_channels"));
    const double bandwidth = cfg.get_double("network", "bandwidth");
    const double noise_density = cfg.get_double("network", "noise_density");
    const std::vector<double> user_power = cfg.get_doubles("powers", "user_power");
    const double jammer_power = cfg.get_double("powers", "jammer_power");

    if (cfg.has("network", "direct_gain_1")) {
        return load_explicit(cfg, n_users, n_channels, user_power, jammer_power, bandwidth,
                             noise_density);
    }

    if (!cfg.has_section("topology")) {
        throw ConfigError("missing_field", "[topology] section (or explicit [network] gains)");
    }
    TopologySpec topo;
    topo.area = cfg.get_double_or("topology", "area", topo.area);
    topo.path_loss_exponent = cfg.get_double_or("topology", "path_loss_exponent", topo.path_loss_exponent);
    topo.reference_gain = cfg.get_double_or("topology", "reference_gain", topo.reference_gain);
    topo.link_distance_min = cfg.get_double_or("topology", "link_distance_min", topo.link_distance_min);
    topo.link_distance_max = cfg.get_double_or("topology", "link_distance_max", topo.link_distance_max);
    const std::uint64_t seed = seed_override ? *seed_override : cfg.get_u64("topology", "seed");
    return generate_scenario(topo, n_users, n_channels, user_power, jammer_power, bandwidth,
                             noise_density, seed);
}

NetworkScenario load_scenario(const Config& cfg) {
    return scenario_from_config(cfg, std::nullopt);
}

NetworkScenario load_scenario(const std::string& config_text) {
    return load_scenario(Config::parse(config_text));
}

std::string serialize_scenario(const NetworkScenario& s) {
    std::ostringstream out;
    auto row = [&](int n, auto getter) {
        std::string text;
        for (int c = 0; c < s.num_channels; ++c) {
            if (c) text += ' ';
            text += fmt_full(getter(n, c));
        }
        return text;
    };
    out << "[network]\n";
    out << "num_users = " << s.num_users << "\n";
    out << "num_channels = " << s.num_channels << "\n";
    out << "bandwidth = " << fmt_full(s.bandwidth) << "\n";
    out << "noise_density = " << fmt_full(s.noise_density) << "\n";
    out << "utility_constant = " << fmt_full(s.utility_constant) << "\n";
    for (int n = 0; n < s.num_users; ++n) {
        out << "direct_gain_" << (n + 1) << " = "
            << row(n, [&](int u, int c) { return s.direct(u, c); }) << "\n";
        out << "jam_gain_" << (n + 1) << " = " << row(n, [&](int u, int c) { return s.jam(u, c); })
            << "\n";
    }
    for (int m = 0; m < s.num_users; ++m) {
        for (int n = m + 1; n < s.num_users; ++n) {
            out << "cross_gain_" << (m + 1) << "_" << (n + 1) << " =";
            for (int c = 0; c < s.num_channels; ++c) out << ' ' << fmt_full(s.cross(m, n, c));
            out << "\n";
        }
    }
    out << "\n[powers]\n";
    out << "user_power =";
    for (double p : s.user_power) out << ' ' << fmt_full(p);
    out << "\n";
    out << "jammer_power = " << fmt_full(s.jammer_power) << "\n";
    return out.str();
}

bool scenario_equal(const NetworkScenario& a, const NetworkScenario& b) {
    return a.num_users == b.num_users && a.num_channels == b.num_channels &&
           a.user_power == b.user_power && a.jammer_power == b.jammer_power &&
           a.cross_gain == b.cross_gain && a.jam_gain == b.jam_gain &&
           a.direct_gain == b.direct_gain && a.bandwidth == b.bandwidth &&
           a.noise_density == b.noise_density && a.utility_constant == b.utility_constant;
}

}  // namespace antijam
