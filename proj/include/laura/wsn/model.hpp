#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace laura::wsn {

/// Node index. 0 is the data center; sensor nodes are 1..N.
using NodeId = int;

/// Planar ground position in meters. The UAV altitude is handled separately.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Travel time between two ground positions at constant speed.
inline double flight_time(Point a, Point b, double speed_mps) {
    if (!(speed_mps > 0.0)) {
        throw std::invalid_argument("flight_time: speed must be positive, got " +
                                    std::to_string(speed_mps));
    }
    if (!is_finite(a) || !is_finite(b)) {
        throw std::invalid_argument("flight_time: points must be finite");
    }
    return distance(a, b) / speed_mps;
}

/// Uplink radio parameters, all in linear SI units (watts, hertz).
struct RadioParams {
    double tx_power_w = 0.3;
    double bandwidth_hz = 1e6;
    double noise_power_w = 1e-14;
    double ref_gain_linear = 1e-5; ///< channel gain at the 1 m reference distance
};

/// Achievable uplink rate in bit/s for a node with channel gain
/// `ref_gain_linear` when the UAV hovers at `altitude_m`:
/// W * log2(1 + P0 * g / (sigma^2 * h^2)).
inline double data_rate(const RadioParams& radio, double ref_gain_linear, double altitude_m) {
    if (!(radio.tx_power_w > 0.0) || !(radio.bandwidth_hz > 0.0) ||
        !(radio.noise_power_w > 0.0) || !(ref_gain_linear > 0.0) || !(altitude_m > 0.0)) {
        throw std::invalid_argument("data_rate: all inputs must be strictly positive");
    }
    const double snr =
        radio.tx_power_w * ref_gain_linear / (radio.noise_power_w * altitude_m * altitude_m);
    return radio.bandwidth_hz * std::log2(1.0 + snr);
}

/// Time to upload `data_bits` at a constant rate.
inline double upload_duration(double data_bits, double rate_bps) {
    if (!(rate_bps > 0.0)) {
        throw std::invalid_argument("upload_duration: rate must be positive, got " +
                                    std::to_string(rate_bps));
    }
    if (data_bits < 0.0) {
        throw std::invalid_argument("upload_duration: data size must be non-negative");
    }
    return data_bits / rate_bps;
}

/// Age of a data item generated at time t_i, observed at time t. Never negative.
inline double aoi_at(double t, double t_i) { return std::max(t - t_i, 0.0); }

/// Stationary ground sensor holding data awaiting collection.
struct SensorNode {
    NodeId id = 0;
    Point position;
    double data_bits = 0.0;
    double ref_gain_linear = 1.0;
};

/// A full problem instance: data center, N sensor nodes, UAV kinematics and
/// radio parameters. Immutable after construction; all evaluation functions
/// are pure, so one Scenario may be shared across threads.
struct Scenario {
    Point data_center;
    std::vector<SensorNode> nodes; ///< ids 1..N, stored in id order
    double uav_altitude_m = 30.0;
    double uav_speed_mps = 10.0;
    RadioParams radio;

    int node_count() const { return static_cast<int>(nodes.size()); }

    const SensorNode& node(NodeId id) const {
        return nodes.at(static_cast<std::size_t>(id) - 1);
    }

    Point position(NodeId id) const { return id == 0 ? data_center : node(id).position; }
};

/// Checks Scenario invariants; throws std::invalid_argument on violation.
/// Returns warnings for degenerate geometry: coincident positions produce
/// zero-time legs, which the strict-positivity travel constraint forbids.
inline std::vector<std::string> validate_scenario(const Scenario& s) {
    if (!(s.uav_speed_mps > 0.0)) throw std::invalid_argument("scenario: UAV speed must be positive");
    if (!(s.uav_altitude_m > 0.0)) throw std::invalid_argument("scenario: UAV altitude must be positive");
    if (s.nodes.empty()) throw std::invalid_argument("scenario: at least one sensor node required");
    if (!(s.radio.tx_power_w > 0.0) || !(s.radio.bandwidth_hz > 0.0) ||
        !(s.radio.noise_power_w > 0.0) || !(s.radio.ref_gain_linear > 0.0)) {
        throw std::invalid_argument("scenario: radio parameters must be strictly positive");
    }
    if (!is_finite(s.data_center)) throw std::invalid_argument("scenario: data center must be finite");
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const SensorNode& node = s.nodes[i];
        if (node.id != static_cast<NodeId>(i) + 1) {
            throw std::invalid_argument("scenario: node ids must be exactly 1..N in order, found id " +
                                        std::to_string(node.id) + " at index " + std::to_string(i));
        }
        if (!is_finite(node.position)) {
            throw std::invalid_argument("scenario: node " + std::to_string(node.id) +
                                        " has a non-finite position");
        }
        if (node.data_bits < 0.0) {
            throw std::invalid_argument("scenario: node " + std::to_string(node.id) +
                                        " has negative data size");
        }
        if (!(node.ref_gain_linear > 0.0)) {
            throw std::invalid_argument("scenario: node " + std::to_string(node.id) +
                                        " has non-positive channel gain");
        }
    }

    std::vector<std::string> warnings;
    // Coincident positions via lexicographic sort; O(N log N).
    struct Tagged { Point p; NodeId id; };
    std::vector<Tagged> pts;
    pts.reserve(s.nodes.size() + 1);
    pts.push_back({s.data_center, 0});
    for (const SensorNode& node : s.nodes) pts.push_back({node.position, node.id});
    std::sort(pts.begin(), pts.end(), [](const Tagged& a, const Tagged& b) {
        return a.p.x != b.p.x ? a.p.x < b.p.x : a.p.y < b.p.y;
    });
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].p.x == pts[i - 1].p.x && pts[i].p.y == pts[i - 1].p.y) {
            warnings.push_back("nodes " + std::to_string(pts[i - 1].id) + " and " +
                               std::to_string(pts[i].id) +
                               " coincide; zero-time legs violate the strict travel-time constraint");
        }
    }
    return warnings;
}

/// Visiting sequence c_0..c_{N+1}. Both endpoints are the data center and the
/// interior is a permutation of 1..N.
struct Route {
    std::vector<NodeId> sequence;
};

inline bool is_valid_route(const Route& route, int n) {
    if (route.sequence.size() != static_cast<std::size_t>(n) + 2) return false;
    if (route.sequence.front() != 0 || route.sequence.back() != 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 1; i + 1 < route.sequence.size(); ++i) {
        const NodeId id = route.sequence[i];
        if (id < 1 || id > n || seen[static_cast<std::size_t>(id)]) return false;
        seen[static_cast<std::size_t>(id)] = true;
    }
    return true;
}

/// Per-route freshness profile. AoI is evaluated at mission completion; the
/// depot-out leg contributes to mission_time but to no node's AoI.
struct AoiProfile {
    std::vector<double> per_node_aoi; ///< A_{c_i} by visit position, i = 1..N
    double max_aoi = 0.0;             ///< equals per_node_aoi.front()
    double mission_time = 0.0;        ///< t_end, depot-out leg included
    double tau_sum = 0.0;             ///< total upload time, route independent
    double travel_objective = 0.0;    ///< leg times from the first node through the return
};

/// Evaluates routes against one scenario. Upload durations depend only on node
/// parameters, so they are computed once here and reused for every route; leg
/// times are additionally cached as a matrix for small instances.
class RouteEvaluator {
public:
    explicit RouteEvaluator(const Scenario& s) : scenario_(&s) {
        const int n = s.node_count();
        tau_.assign(static_cast<std::size_t>(n) + 1, 0.0);
        for (const SensorNode& node : s.nodes) {
            const double rate = data_rate(s.radio, node.ref_gain_linear, s.uav_altitude_m);
            tau_[static_cast<std::size_t>(node.id)] = upload_duration(node.data_bits, rate);
            tau_sum_ += tau_[static_cast<std::size_t>(node.id)];
        }
        if (n + 1 <= kMatrixLimit) {
            stride_ = n + 1;
            matrix_.resize(static_cast<std::size_t>(stride_) * stride_);
            for (NodeId a = 0; a <= n; ++a) {
                for (NodeId b = 0; b <= n; ++b) {
                    matrix_[static_cast<std::size_t>(a) * stride_ + b] =
                        flight_time(s.position(a), s.position(b), s.uav_speed_mps);
                }
            }
        }
    }

    const Scenario& scenario() const { return *scenario_; }

    double tau(NodeId id) const { return tau_[static_cast<std::size_t>(id)]; }

    double tau_sum() const { return tau_sum_; }

    double leg_time(NodeId a, NodeId b) const {
        if (stride_ > 0) return matrix_[static_cast<std::size_t>(a) * stride_ + b];
        return flight_time(scenario_->position(a), scenario_->position(b),
                           scenario_->uav_speed_mps);
    }

    AoiProfile evaluate(const Route& route) const {
        const int n = scenario_->node_count();
        if (!is_valid_route(route, n)) {
            throw std::invalid_argument("evaluate: route violates the routing invariants");
        }
        AoiProfile profile;
        profile.per_node_aoi.resize(static_cast<std::size_t>(n));
        // A_{c_i} accumulates tau and leg time suffixes from the last node back.
        double acc = 0.0;
        for (int i = n; i >= 1; --i) {
            const NodeId at = route.sequence[static_cast<std::size_t>(i)];
            const NodeId next = route.sequence[static_cast<std::size_t>(i) + 1];
            acc += tau(at) + leg_time(at, next);
            profile.per_node_aoi[static_cast<std::size_t>(i) - 1] = acc;
        }
        profile.max_aoi = profile.per_node_aoi.front();
        profile.tau_sum = tau_sum_;
        profile.travel_objective = travel_objective(route);
        profile.mission_time =
            leg_time(route.sequence[0], route.sequence[1]) + profile.max_aoi;
        return profile;
    }

    /// Leg times from the first visited node through the return to the depot;
    /// the depot-out leg is excluded.
    double travel_objective(const Route& route) const {
        const int n = scenario_->node_count();
        if (!is_valid_route(route, n)) {
            throw std::invalid_argument("travel_objective: route violates the routing invariants");
        }
        double total = 0.0;
        for (int k = 1; k <= n; ++k) {
            total += leg_time(route.sequence[static_cast<std::size_t>(k)],
                              route.sequence[static_cast<std::size_t>(k) + 1]);
        }
        return total;
    }

private:
    static constexpr int kMatrixLimit = 512;

    const Scenario* scenario_;
    std::vector<double> tau_;
    double tau_sum_ = 0.0;
    std::vector<double> matrix_;
    int stride_ = 0;
};

inline AoiProfile evaluate_route(const Scenario& s, const Route& route) {
    return RouteEvaluator(s).evaluate(route);
}

inline double route_objective(const Scenario& s, const Route& route) {
    return RouteEvaluator(s).travel_objective(route);
}

} // namespace laura::wsn
