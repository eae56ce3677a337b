#pragma once

#include <cmath>
#include <vector>

#include "laura/util/rng.hpp"
#include "laura/wsn/generate.hpp"
#include "laura/wsn/model.hpp"

namespace test_support {

/// Depot at the origin, node 1 at (0, 30), node 2 at (40, 30), 10 m/s, and
/// data sized so every upload takes exactly one second. Leg times are then
/// 3, 4, and 5 seconds, which makes every AoI value checkable by hand:
/// route [0,1,2,0] has per-node AoI {11, 6}, route [0,2,1,0] has {9, 4}.
inline laura::wsn::Scenario triangle_scenario() {
    laura::wsn::Scenario s;
    s.data_center = {0.0, 0.0};
    s.uav_altitude_m = 30.0;
    s.uav_speed_mps = 10.0;
    const double rate = laura::wsn::data_rate(s.radio, 1e-5, s.uav_altitude_m);
    s.nodes = {{1, {0.0, 30.0}, rate, 1e-5}, {2, {40.0, 30.0}, rate, 1e-5}};
    return s;
}

/// Independent AoI computation, straight from the definition: for each
/// visit position, sum the remaining upload times and the remaining leg
/// times through the return to the depot. Shares no code with the library
/// evaluator beyond the primitive time helpers.
inline std::vector<double> naive_per_node_aoi(const laura::wsn::Scenario& s,
                                              const laura::wsn::Route& route) {
    const std::size_t n = route.sequence.size() - 2;
    std::vector<double> aoi;
    aoi.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        double value = 0.0;
        for (std::size_t j = i; j <= n; ++j) {
            const laura::wsn::SensorNode& node = s.node(route.sequence[j]);
            value += laura::wsn::upload_duration(
                node.data_bits, laura::wsn::data_rate(s.radio, node.ref_gain_linear,
                                                      s.uav_altitude_m));
            value += laura::wsn::flight_time(s.position(route.sequence[j]),
                                             s.position(route.sequence[j + 1]), s.uav_speed_mps);
        }
        aoi.push_back(value);
    }
    return aoi;
}

inline double naive_max_aoi(const laura::wsn::Scenario& s, const laura::wsn::Route& route) {
    return naive_per_node_aoi(s, route).front();
}

/// Random scenario drawn with the library generator; thin wrapper so tests
/// read uniformly.
inline laura::wsn::Scenario random_scenario(int n, std::uint64_t seed, double radius = 3000.0) {
    return laura::wsn::generate_scenario(n, radius, seed);
}

/// A random valid route over n nodes, for property tests.
inline laura::wsn::Route random_valid_route(int n, laura::util::Rng& rng) {
    std::vector<laura::wsn::NodeId> interior;
    interior.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) interior.push_back(i);
    rng.shuffle(interior);
    laura::wsn::Route route;
    route.sequence.push_back(0);
    route.sequence.insert(route.sequence.end(), interior.begin(), interior.end());
    route.sequence.push_back(0);
    return route;
}

inline bool close(double a, double b, double rel = 1e-12) {
    return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), 1.0});
}

} // namespace test_support
