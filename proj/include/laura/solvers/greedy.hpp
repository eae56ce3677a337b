#pragma once

#include <vector>

#include "laura/evo/types.hpp"
#include "laura/wsn/model.hpp"

namespace laura::solvers {

/// Nearest-neighbor construction: starting at the data center, repeatedly
/// flies to the closest unvisited sensor node, then returns. Distance ties
/// are broken by the lower node id, so the result is fully deterministic.
inline evo::Individual solve_greedy(const wsn::Scenario& scenario) {
    const int n = scenario.node_count();
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);

    wsn::Route route;
    route.sequence.reserve(static_cast<std::size_t>(n) + 2);
    route.sequence.push_back(0);

    wsn::Point current = scenario.data_center;
    for (int step = 0; step < n; ++step) {
        wsn::NodeId pick = -1;
        double best_distance = 0.0;
        for (wsn::NodeId id = 1; id <= n; ++id) {
            if (visited[static_cast<std::size_t>(id)]) continue;
            const double d = wsn::distance(current, scenario.position(id));
            if (pick < 0 || d < best_distance) {
                pick = id;
                best_distance = d;
            }
        }
        visited[static_cast<std::size_t>(pick)] = true;
        route.sequence.push_back(pick);
        current = scenario.position(pick);
    }
    route.sequence.push_back(0);

    return {route, wsn::evaluate_route(scenario, route).max_aoi};
}

} // namespace laura::solvers
