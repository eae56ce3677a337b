#pragma once

#include <numeric>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/util/rng.hpp"
#include "laura/wsn/model.hpp"

namespace laura::solvers {

/// A uniformly random visiting order wrapped with depot endpoints.
inline wsn::Route random_route(int n, util::Rng& rng) {
    std::vector<wsn::NodeId> interior(static_cast<std::size_t>(n));
    std::iota(interior.begin(), interior.end(), 1);
    rng.shuffle(interior);

    wsn::Route route;
    route.sequence.reserve(static_cast<std::size_t>(n) + 2);
    route.sequence.push_back(0);
    route.sequence.insert(route.sequence.end(), interior.begin(), interior.end());
    route.sequence.push_back(0);
    return route;
}

/// The random baseline: one uniformly random route, evaluated.
inline evo::Individual solve_random(const wsn::Scenario& scenario, util::Rng& rng) {
    const wsn::Route route = random_route(scenario.node_count(), rng);
    return {route, wsn::evaluate_route(scenario, route).max_aoi};
}

} // namespace laura::solvers
