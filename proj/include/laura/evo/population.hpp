#pragma once

#include <stdexcept>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/util/rng.hpp"

namespace laura::evo {

/// Draws n_p distinct members uniformly at random, without replacement.
/// Selection is uniform rather than fitness-biased to preserve diversity.
inline std::vector<Individual> select_parents(const Population& population, std::size_t n_p,
                                              util::Rng& rng) {
    if (n_p < 1 || n_p > population.size()) {
        throw std::invalid_argument("select_parents: parent count must be in [1, " +
                                    std::to_string(population.size()) + "], got " +
                                    std::to_string(n_p));
    }
    std::vector<Individual> parents;
    parents.reserve(n_p);
    for (std::size_t i : rng.sample_indices(population.size(), n_p)) {
        parents.push_back(population[i]);
    }
    return parents;
}

/// Adds `newcomer` to a full population and evicts the member with the
/// largest omega (lowest fitness). Ties evict the most recently admitted
/// member, so a newcomer tying the worst incumbent is itself removed. The
/// best omega in the population never increases across admissions.
inline void admit_and_truncate(Population& population, Individual newcomer) {
    if (!population.full()) {
        throw std::logic_error("admit_and_truncate: population must be at capacity");
    }
    population.members_.push_back(std::move(newcomer));
    std::size_t victim = 0;
    for (std::size_t i = 1; i < population.members_.size(); ++i) {
        if (population.members_[i].omega >= population.members_[victim].omega) victim = i;
    }
    population.members_.erase(population.members_.begin() +
                              static_cast<std::ptrdiff_t>(victim));
}

/// The member with minimal omega; ties go to the earliest admission.
inline const Individual& best(const Population& population) {
    if (population.empty()) throw std::logic_error("best: population is empty");
    std::size_t idx = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (population[i].omega < population[idx].omega) idx = i;
    }
    return population[idx];
}

} // namespace laura::evo
