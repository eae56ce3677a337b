#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "laura/engine/port.hpp"
#include "laura/evo/population.hpp"
#include "laura/evo/types.hpp"
#include "laura/evo/verify.hpp"
#include "laura/solvers/random.hpp"
#include "laura/util/rng.hpp"
#include "laura/wsn/model.hpp"

namespace laura::engine {

/// Algorithm knobs: population size K, parent count N_p, iteration count
/// N_g, and the per-iteration attempt budget M for feedback retries.
struct LauraConfig {
    std::size_t population_size = 10;
    std::size_t parent_count = 5;
    std::size_t iterations = 10;
    std::size_t max_attempts = 3;
    double omega_tolerance = 1e-6;
    std::uint64_t seed = 0;
};

inline void validate_config(const LauraConfig& config) {
    if (config.population_size < 1) {
        throw std::invalid_argument("LauraConfig: population_size must be >= 1");
    }
    if (config.parent_count < 1 || config.parent_count > config.population_size) {
        throw std::invalid_argument("LauraConfig: parent_count must be in [1, population_size]");
    }
    if (config.max_attempts < 1) {
        throw std::invalid_argument("LauraConfig: max_attempts must be >= 1");
    }
    if (!(config.omega_tolerance >= 0.0)) {
        throw std::invalid_argument("LauraConfig: omega_tolerance must be >= 0");
    }
}

enum class AttemptOutcome { Accepted, Rejected };

/// One generator proposal and its fate. Initialization proposals are
/// tallied separately (see SolverReport), so every entry here belongs to an
/// iteration (LAURA) or a sample (direct sampling).
struct AttemptLog {
    std::size_t iteration = 0; ///< 1-based
    std::size_t attempt = 0;   ///< 1-based within the iteration, at most M
    AttemptOutcome outcome = AttemptOutcome::Rejected;
    std::optional<evo::FaultKind> reject_kind;
    double latency_s = 0.0;
};

/// Rejected / total over an attempt list; 0 for an empty list.
inline double hallucination_rate(const std::vector<AttemptLog>& attempts) {
    if (attempts.empty()) return 0.0;
    std::size_t rejected = 0;
    for (const AttemptLog& attempt : attempts) {
        if (attempt.outcome == AttemptOutcome::Rejected) ++rejected;
    }
    return static_cast<double>(rejected) / static_cast<double>(attempts.size());
}

/// Everything a run produces. `hallucination_rate` counts every candidate
/// the generator was asked for: the K initialization slots (failed ones are
/// back-filled locally and tallied in init_rejections) plus all offspring
/// attempts.
struct SolverReport {
    std::optional<evo::Individual> best;
    evo::Population final_population{1};
    std::vector<double> best_trace; ///< non-increasing; entry 0 is post-initialization
    std::vector<AttemptLog> attempts;
    std::size_t init_proposals = 0;
    std::size_t init_rejections = 0;
    double hallucination_rate = 0.0;
};

/// Injectable time source for latency fields; the default reads the steady
/// clock. Supplying a counter makes whole reports bit-reproducible.
using Clock = std::function<double()>;

namespace detail {

inline Clock default_clock() {
    return [] {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    };
}

inline evo::VerificationError error_from_exception() {
    try {
        throw;
    } catch (const std::exception& e) {
        return {evo::FaultKind::Unparseable, std::string("generator failure: ") + e.what()};
    } catch (...) {
        return {evo::FaultKind::Unparseable, "generator failure: unknown error"};
    }
}

} // namespace detail

/// The full evolutionary loop: LLM-seeded initialization with local
/// back-fill, then `iterations` rounds of parent selection, offspring
/// generation with up-to-M verification-feedback retries, and elitist
/// admission. Deterministic given the seed, a deterministic generator, and
/// a deterministic clock.
inline SolverReport run_laura(const wsn::Scenario& scenario, const LauraConfig& config,
                              GeneratorPort& generator, const Clock& clock_in = {}) {
    validate_config(config);
    wsn::validate_scenario(scenario);
    const Clock clock = clock_in ? clock_in : detail::default_clock();

    util::Rng rng(config.seed);
    const wsn::RouteEvaluator evaluator(scenario);

    SolverReport report;
    report.init_proposals = config.population_size;

    evo::Population population(config.population_size);
    {
        std::vector<evo::CandidateIndividual> candidates;
        try {
            candidates = generator.propose_initial(scenario, config.population_size);
        } catch (...) {
            candidates.clear();
        }
        if (candidates.size() > config.population_size) {
            candidates.resize(config.population_size);
        }
        for (const evo::CandidateIndividual& candidate : candidates) {
            evo::VerifyResult result = evo::verify(scenario, candidate, config.omega_tolerance);
            if (auto* individual = std::get_if<evo::Individual>(&result)) {
                population.add(std::move(*individual));
            } else {
                ++report.init_rejections;
            }
        }
        report.init_rejections +=
            config.population_size - candidates.size(); // unanswered slots count as rejections
        while (!population.full()) {
            const wsn::Route route = solvers::random_route(scenario.node_count(), rng);
            population.add({route, evaluator.evaluate(route).max_aoi});
        }
    }
    report.best_trace.push_back(evo::best(population).omega);

    for (std::size_t iteration = 1; iteration <= config.iterations; ++iteration) {
        const std::vector<evo::Individual> parents =
            evo::select_parents(population, config.parent_count, rng);
        std::optional<evo::VerificationError> feedback;
        for (std::size_t attempt = 1; attempt <= config.max_attempts; ++attempt) {
            const double began = clock();
            ProposalResult proposal;
            try {
                proposal = generator.propose_offspring(scenario, parents, feedback);
            } catch (...) {
                proposal = detail::error_from_exception();
            }
            AttemptLog log;
            log.iteration = iteration;
            log.attempt = attempt;
            log.latency_s = clock() - began;

            evo::VerifyResult result;
            if (auto* candidate = std::get_if<evo::CandidateIndividual>(&proposal)) {
                result = evo::verify(scenario, *candidate, config.omega_tolerance);
            } else {
                result = std::get<evo::VerificationError>(std::move(proposal));
            }

            if (auto* individual = std::get_if<evo::Individual>(&result)) {
                log.outcome = AttemptOutcome::Accepted;
                report.attempts.push_back(log);
                evo::admit_and_truncate(population, std::move(*individual));
                break;
            }
            const auto& error = std::get<evo::VerificationError>(result);
            log.outcome = AttemptOutcome::Rejected;
            log.reject_kind = error.kind;
            report.attempts.push_back(log);
            feedback = error;
        }
        report.best_trace.push_back(evo::best(population).omega);
    }

    report.best = evo::best(population);
    report.final_population = std::move(population);
    std::size_t rejected = report.init_rejections;
    for (const AttemptLog& attempt : report.attempts) {
        if (attempt.outcome == AttemptOutcome::Rejected) ++rejected;
    }
    report.hallucination_rate = static_cast<double>(rejected) /
                                static_cast<double>(report.init_proposals + report.attempts.size());
    return report;
}

/// The direct-sampling baseline: `samples` independent proposals, no parent
/// context, no error feedback, no evolution. A candidate counts as valid
/// when it passes the structural checks (endpoints and coverage); omega is
/// recomputed locally either way. With zero valid candidates the report
/// carries no best individual.
inline SolverReport run_ledma(const wsn::Scenario& scenario, std::size_t samples,
                              GeneratorPort& generator, const Clock& clock_in = {}) {
    if (samples < 1) throw std::invalid_argument("run_ledma: samples must be >= 1");
    wsn::validate_scenario(scenario);
    const Clock clock = clock_in ? clock_in : detail::default_clock();

    SolverReport report;
    evo::Population population(samples);

    for (std::size_t sample = 1; sample <= samples; ++sample) {
        const double began = clock();
        std::vector<evo::CandidateIndividual> candidates;
        try {
            candidates = generator.propose_initial(scenario, 1);
        } catch (...) {
            candidates.clear();
        }
        AttemptLog log;
        log.iteration = sample;
        log.attempt = 1;
        log.latency_s = clock() - began;

        bool accepted = false;
        if (!candidates.empty()) {
            evo::VerifyResult result = evo::verify_structure(scenario, candidates.front());
            if (auto* individual = std::get_if<evo::Individual>(&result)) {
                population.add(std::move(*individual));
                accepted = true;
            } else {
                log.reject_kind = std::get<evo::VerificationError>(result).kind;
            }
        } else {
            log.reject_kind = evo::FaultKind::Unparseable;
        }
        log.outcome = accepted ? AttemptOutcome::Accepted : AttemptOutcome::Rejected;
        report.attempts.push_back(log);
        if (!population.empty()) {
            report.best_trace.push_back(evo::best(population).omega);
        }
    }

    if (!population.empty()) report.best = evo::best(population);
    report.final_population = std::move(population);
    report.hallucination_rate = hallucination_rate(report.attempts);
    return report;
}

} // namespace laura::engine
