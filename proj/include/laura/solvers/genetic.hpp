#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/solvers/crossover.hpp"
#include "laura/solvers/random.hpp"
#include "laura/solvers/types.hpp"
#include "laura/util/rng.hpp"
#include "laura/wsn/model.hpp"

namespace laura::solvers {

/// Knobs for the classical genetic baseline.
struct GeneticConfig {
    std::size_t population_size = 50;
    std::size_t generations = 500;
    double crossover_rate = 0.9;
    double mutation_rate = 0.2;
    std::size_t tournament_size = 3;
    std::uint64_t seed = 0;
};

inline void validate_config(const GeneticConfig& config) {
    if (config.population_size < 1) {
        throw std::invalid_argument("GeneticConfig: population_size must be >= 1");
    }
    if (config.tournament_size < 1) {
        throw std::invalid_argument("GeneticConfig: tournament_size must be >= 1");
    }
    if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0)) {
        throw std::invalid_argument("GeneticConfig: crossover_rate must be in [0, 1]");
    }
    if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0)) {
        throw std::invalid_argument("GeneticConfig: mutation_rate must be in [0, 1]");
    }
}

/// Called after the initial population (generation 0) and after every
/// replacement step with the full generation contents.
using GenerationObserver =
    std::function<void(std::size_t generation, const std::vector<evo::Individual>&)>;

/// Classical elitist genetic algorithm: random initial population,
/// tournament selection, order crossover, swap mutation, and carryover of
/// the incumbent best into every new generation. Deterministic for a fixed
/// seed up to wall-clock timing.
inline SolverRun solve_genetic(const wsn::Scenario& scenario, const GeneticConfig& config,
                               const GenerationObserver& observer = {}) {
    validate_config(config);
    const auto started = std::chrono::steady_clock::now();

    util::Rng rng(config.seed);
    const wsn::RouteEvaluator evaluator(scenario);
    const int n = scenario.node_count();

    SolverRun run;
    auto make_individual = [&](wsn::Route route) {
        const double omega = evaluator.evaluate(route).max_aoi;
        ++run.evaluations;
        return evo::Individual{std::move(route), omega};
    };

    std::vector<evo::Individual> population;
    population.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        population.push_back(make_individual(random_route(n, rng)));
    }

    auto best_of = [](const std::vector<evo::Individual>& members) {
        std::size_t idx = 0;
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (members[i].omega < members[idx].omega) idx = i;
        }
        return idx;
    };

    auto tournament = [&](const std::vector<evo::Individual>& members) -> const evo::Individual& {
        std::size_t winner = rng.index(members.size());
        for (std::size_t round = 1; round < config.tournament_size; ++round) {
            const std::size_t challenger = rng.index(members.size());
            if (members[challenger].omega < members[winner].omega) winner = challenger;
        }
        return members[winner];
    };

    run.history.reserve(config.generations + 1);
    run.history.push_back(population[best_of(population)].omega);
    if (observer) observer(0, population);

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        std::vector<evo::Individual> next;
        next.reserve(config.population_size);
        next.push_back(population[best_of(population)]);
        while (next.size() < config.population_size) {
            const evo::Individual& a = tournament(population);
            const evo::Individual& b = tournament(population);
            wsn::Route child = rng.bernoulli(config.crossover_rate)
                                   ? order_crossover(a.route, b.route, rng)
                                   : a.route;
            if (rng.bernoulli(config.mutation_rate)) swap_mutation(child, rng);
            next.push_back(make_individual(std::move(child)));
        }
        population = std::move(next);
        run.history.push_back(population[best_of(population)].omega);
        if (observer) observer(gen, population);
    }

    run.best = population[best_of(population)];
    run.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return run;
}

} // namespace laura::solvers
