#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/wsn/model.hpp"

namespace laura::evo {

using VerifyResult = std::variant<Individual, VerificationError>;

namespace detail {

inline std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

/// Structural checks (endpoints, coverage) and optionally the objective-claim
/// check. The returned Individual always carries the locally recomputed
/// omega, never the claim.
inline VerifyResult verify_impl(const wsn::Scenario& scenario, const CandidateIndividual& candidate,
                                double omega_tolerance, bool check_claim) {
    const int n = scenario.node_count();
    const std::vector<wsn::NodeId>& seq = candidate.route_claim;

    if (seq.size() != static_cast<std::size_t>(n) + 2) {
        return VerificationError{
            FaultKind::WrongLength,
            "route has " + std::to_string(seq.size()) + " entries but " + std::to_string(n + 2) +
                " are required: the data center, all " + std::to_string(n) +
                " sensor nodes, then the data center again"};
    }
    if (seq.front() != 0 || seq.back() != 0) {
        return VerificationError{
            FaultKind::BadEndpoints,
            "route must start and end at the data center (id 0) but starts at " +
                std::to_string(seq.front()) + " and ends at " + std::to_string(seq.back())};
    }

    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    wsn::NodeId alien = -1;
    std::size_t alien_pos = 0;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        const wsn::NodeId id = seq[i];
        if (id < 1 || id > n) {
            if (alien < 0) {
                alien = id;
                alien_pos = i;
            }
        } else {
            ++count[static_cast<std::size_t>(id)];
        }
    }
    for (wsn::NodeId id = 1; id <= n; ++id) {
        if (count[static_cast<std::size_t>(id)] > 1) {
            return VerificationError{
                FaultKind::DuplicateNode,
                "node " + std::to_string(id) + " appears " +
                    std::to_string(count[static_cast<std::size_t>(id)]) +
                    " times; each sensor node must be visited exactly once"};
        }
    }
    for (wsn::NodeId id = 1; id <= n; ++id) {
        if (count[static_cast<std::size_t>(id)] == 0) {
            std::string detail = "node " + std::to_string(id) + " is missing from the route";
            if (alien >= 0) {
                detail += " (unknown id " + std::to_string(alien) + " found at position " +
                          std::to_string(alien_pos) + ")";
            }
            return VerificationError{FaultKind::MissingNode, detail};
        }
    }

    const wsn::Route route{seq};
    const double omega = wsn::evaluate_route(scenario, route).max_aoi;

    if (check_claim && candidate.omega_claim.has_value()) {
        const double claim = *candidate.omega_claim;
        const double scale = std::max(std::abs(omega), 1e-300);
        if (!(std::abs(claim - omega) <= omega_tolerance * scale)) {
            return VerificationError{
                FaultKind::ObjectiveMismatch,
                "claimed maximum AoI " + format_number(claim) + " but the route evaluates to " +
                    format_number(omega) + " (relative tolerance " +
                    format_number(omega_tolerance) + ")"};
        }
    }
    return Individual{route, omega};
}

} // namespace detail

/// Full verification: endpoints, node coverage, and (when a claim is present)
/// agreement of the claimed objective with the recomputed one.
inline VerifyResult verify(const wsn::Scenario& scenario, const CandidateIndividual& candidate,
                           double omega_tolerance = 1e-6) {
    return detail::verify_impl(scenario, candidate, omega_tolerance, true);
}

/// Structural verification only: endpoints and node coverage. The objective is
/// still recomputed locally for the returned Individual, but a mismatching
/// claim is not treated as a fault.
inline VerifyResult verify_structure(const wsn::Scenario& scenario,
                                     const CandidateIndividual& candidate) {
    return detail::verify_impl(scenario, candidate, 0.0, false);
}

/// Fitness e^{-omega}: strictly decreasing in omega, in (0, 1] for omega >= 0.
/// Underflows to zero for very large omega, so ordering decisions throughout
/// the library compare omega directly; fitness is reporting-only.
inline double fitness(double omega) { return std::exp(-omega); }

} // namespace laura::evo
