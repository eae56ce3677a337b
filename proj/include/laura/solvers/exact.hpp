#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/wsn/model.hpp"

namespace laura::solvers {

/// Instance-size limits for the exact solvers. Exhaustive scanning walks
/// N! permutations; Held-Karp allocates a 2^N x N table, so both refuse
/// instances that would blow past desk-scale budgets.
struct ExactCaps {
    int exhaustive = 9;
    int held_karp = 18;
};

/// Optimal route by lexicographic permutation scan. The objective excludes
/// the depot-outgoing leg, matching the AoI of the first-visited node. Ties
/// return the lexicographically smallest interior.
inline evo::Individual solve_exhaustive(const wsn::Scenario& scenario, int cap = 9) {
    const int n = scenario.node_count();
    if (n > cap) {
        throw std::length_error("solve_exhaustive: N=" + std::to_string(n) +
                                " exceeds the exhaustive cap of " + std::to_string(cap));
    }
    const wsn::RouteEvaluator evaluator(scenario);

    std::vector<wsn::NodeId> interior(static_cast<std::size_t>(n));
    std::iota(interior.begin(), interior.end(), 1);

    std::vector<wsn::NodeId> best_interior;
    double best_objective = std::numeric_limits<double>::infinity();
    do {
        double objective = 0.0;
        for (std::size_t k = 0; k + 1 < interior.size(); ++k) {
            objective += evaluator.leg_time(interior[k], interior[k + 1]);
        }
        objective += evaluator.leg_time(interior.back(), 0);
        if (objective < best_objective) {
            best_objective = objective;
            best_interior = interior;
        }
    } while (std::next_permutation(interior.begin(), interior.end()));

    wsn::Route route;
    route.sequence.reserve(static_cast<std::size_t>(n) + 2);
    route.sequence.push_back(0);
    route.sequence.insert(route.sequence.end(), best_interior.begin(), best_interior.end());
    route.sequence.push_back(0);
    return {route, evaluator.evaluate(route).max_aoi};
}

/// Optimal route by Held-Karp dynamic programming over the asymmetric cost
/// matrix in which every depot-outgoing arc costs zero and all other arcs
/// carry true flight times.
inline evo::Individual solve_held_karp(const wsn::Scenario& scenario, int cap = 18) {
    const int n = scenario.node_count();
    if (n > cap) {
        throw std::length_error("solve_held_karp: N=" + std::to_string(n) +
                                " exceeds the Held-Karp cap of " + std::to_string(cap));
    }
    const wsn::RouteEvaluator evaluator(scenario);

    const std::size_t masks = std::size_t{1} << n;
    const auto width = static_cast<std::size_t>(n);
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(masks * width, kInf);
    std::vector<std::int8_t> parent(masks * width, -1);
    auto at = [width](std::size_t mask, int j) {
        return mask * width + static_cast<std::size_t>(j);
    };

    for (int j = 0; j < n; ++j) dp[at(std::size_t{1} << j, j)] = 0.0;

    for (std::size_t mask = 1; mask < masks; ++mask) {
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const double base = dp[at(mask, j)];
            if (base == kInf) continue;
            for (int k = 0; k < n; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                const std::size_t extended = mask | (std::size_t{1} << k);
                const double cand = base + evaluator.leg_time(j + 1, k + 1);
                if (cand < dp[at(extended, k)]) {
                    dp[at(extended, k)] = cand;
                    parent[at(extended, k)] = static_cast<std::int8_t>(j);
                }
            }
        }
    }

    const std::size_t full = masks - 1;
    int last = 0;
    double best_objective = kInf;
    for (int j = 0; j < n; ++j) {
        const double total = dp[at(full, j)] + evaluator.leg_time(j + 1, 0);
        if (total < best_objective) {
            best_objective = total;
            last = j;
        }
    }

    std::vector<wsn::NodeId> interior;
    interior.reserve(static_cast<std::size_t>(n));
    std::size_t mask = full;
    int j = last;
    while (j >= 0) {
        interior.push_back(j + 1);
        const int prev = parent[at(mask, j)];
        mask &= ~(std::size_t{1} << j);
        j = prev;
    }
    std::reverse(interior.begin(), interior.end());

    wsn::Route route;
    route.sequence.reserve(static_cast<std::size_t>(n) + 2);
    route.sequence.push_back(0);
    route.sequence.insert(route.sequence.end(), interior.begin(), interior.end());
    route.sequence.push_back(0);
    return {route, evaluator.evaluate(route).max_aoi};
}

/// Exact oracle: exhaustive scan for small N, Held-Karp beyond that, and a
/// capacity error for instances past both caps.
inline evo::Individual solve_exact(const wsn::Scenario& scenario, ExactCaps caps = {}) {
    const int n = scenario.node_count();
    if (n <= caps.exhaustive) return solve_exhaustive(scenario, caps.exhaustive);
    return solve_held_karp(scenario, caps.held_karp);
}

} // namespace laura::solvers
