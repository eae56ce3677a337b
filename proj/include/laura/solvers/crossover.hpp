#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laura/util/rng.hpp"
#include "laura/wsn/model.hpp"

namespace laura::solvers {

namespace detail {

inline void require_same_node_set(const wsn::Route& p1, const wsn::Route& p2) {
    if (p1.sequence.size() != p2.sequence.size()) {
        throw std::invalid_argument("order_crossover: parents have different lengths");
    }
    if (p1.sequence.size() < 2 || p1.sequence.front() != 0 || p1.sequence.back() != 0 ||
        p2.sequence.front() != 0 || p2.sequence.back() != 0) {
        throw std::invalid_argument("order_crossover: parents must start and end at the depot");
    }
    auto a = p1.sequence;
    auto b = p2.sequence;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
        throw std::invalid_argument("order_crossover: parents visit different node sets");
    }
}

} // namespace detail

/// Order crossover (OX) over the interior of two depot-anchored routes.
///
/// The child copies p1's interior segment at 1-based positions [cut.first,
/// cut.second] in place, then fills the remaining positions with p2's
/// interior nodes in p2 order starting just after the segment, wrapping
/// around and skipping nodes the segment already contains.
inline wsn::Route order_crossover(const wsn::Route& p1, const wsn::Route& p2,
                                  std::pair<int, int> cut) {
    detail::require_same_node_set(p1, p2);
    const int n = static_cast<int>(p1.sequence.size()) - 2;
    if (cut.first < 1 || cut.first >= cut.second || cut.second > n) {
        throw std::invalid_argument("order_crossover: cut must satisfy 1 <= i < j <= " +
                                    std::to_string(n));
    }

    wsn::Route child;
    child.sequence.assign(p1.sequence.size(), -1);
    child.sequence.front() = 0;
    child.sequence.back() = 0;

    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int pos = cut.first; pos <= cut.second; ++pos) {
        const wsn::NodeId id = p1.sequence[static_cast<std::size_t>(pos)];
        child.sequence[static_cast<std::size_t>(pos)] = id;
        used[static_cast<std::size_t>(id)] = true;
    }

    auto next_interior = [n](int pos) { return pos >= n ? 1 : pos + 1; };
    int write = next_interior(cut.second);
    for (int read = next_interior(cut.second), taken = 0; taken < n - (cut.second - cut.first + 1);
         read = next_interior(read)) {
        const wsn::NodeId id = p2.sequence[static_cast<std::size_t>(read)];
        if (used[static_cast<std::size_t>(id)]) continue;
        child.sequence[static_cast<std::size_t>(write)] = id;
        used[static_cast<std::size_t>(id)] = true;
        write = next_interior(write);
        ++taken;
    }
    return child;
}

/// OX with a uniformly random interior cut. Parents with fewer than two
/// interior nodes have no valid cut, so the child is a copy of p1.
inline wsn::Route order_crossover(const wsn::Route& p1, const wsn::Route& p2, util::Rng& rng) {
    detail::require_same_node_set(p1, p2);
    const int n = static_cast<int>(p1.sequence.size()) - 2;
    if (n < 2) return p1;
    const auto a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    auto b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
    if (b >= a) ++b;
    return order_crossover(p1, p2, {std::min(a, b) + 1, std::max(a, b) + 1});
}

/// Exchanges two distinct interior positions in place; a no-op when the
/// route has fewer than two interior nodes.
inline void swap_mutation(wsn::Route& route, util::Rng& rng) {
    const int n = static_cast<int>(route.sequence.size()) - 2;
    if (n < 2) return;
    const auto a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    auto b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) - 1));
    if (b >= a) ++b;
    std::swap(route.sequence[static_cast<std::size_t>(a) + 1],
              route.sequence[static_cast<std::size_t>(b) + 1]);
}

} // namespace laura::solvers
