#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "laura/util/rng.hpp"
#include "laura/wsn/model.hpp"

namespace laura::wsn {

/// Default instance parameters: 30 m altitude, 10 m/s, 0.3 W transmit power,
/// 1 MHz bandwidth, -110 dBm noise, -50 dB reference gain, 0.5 Mb per node.
struct ScenarioDefaults {
    double uav_altitude_m = 30.0;
    double uav_speed_mps = 10.0;
    RadioParams radio;
    double data_bits = 5e5;
    double ref_gain_linear = 1e-5;
};

/// Draws `n` sensor nodes uniformly over the disk of radius `radius_m`
/// centered at the origin (uniform over area), data center at (0, 0).
/// Deterministic for a fixed seed.
inline Scenario generate_scenario(int n, double radius_m, std::uint64_t seed,
                                  const ScenarioDefaults& defaults = {}) {
    if (n < 1) throw std::invalid_argument("generate_scenario: need at least one node");
    if (!(radius_m > 0.0)) throw std::invalid_argument("generate_scenario: radius must be positive");

    util::Rng rng(seed);
    Scenario s;
    s.data_center = {0.0, 0.0};
    s.uav_altitude_m = defaults.uav_altitude_m;
    s.uav_speed_mps = defaults.uav_speed_mps;
    s.radio = defaults.radio;
    s.nodes.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double r = radius_m * std::sqrt(rng.uniform());
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        s.nodes.push_back({i,
                           {r * std::cos(angle), r * std::sin(angle)},
                           defaults.data_bits,
                           defaults.ref_gain_linear});
    }
    return s;
}

} // namespace laura::wsn
