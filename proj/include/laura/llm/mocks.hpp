#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laura/engine/port.hpp"
#include "laura/evo/types.hpp"
#include "laura/solvers/crossover.hpp"
#include "laura/solvers/exact.hpp"
#include "laura/solvers/random.hpp"
#include "laura/util/rng.hpp"
#include "laura/wsn/model.hpp"

namespace laura::llm {

/// Deterministic generators standing in for a language model, for offline
/// tests and reproducible benchmark runs.

/// Always proposes the exact-optimal route, with a truthful omega claim.
class PerfectMock final : public engine::GeneratorPort {
public:
    std::vector<evo::CandidateIndividual> propose_initial(const wsn::Scenario& scenario,
                                                          std::size_t count) override {
        return std::vector<evo::CandidateIndividual>(count, optimum(scenario));
    }

    engine::ProposalResult propose_offspring(const wsn::Scenario& scenario,
                                             const std::vector<evo::Individual>&,
                                             const std::optional<evo::VerificationError>&) override {
        return optimum(scenario);
    }

private:
    static evo::CandidateIndividual optimum(const wsn::Scenario& scenario) {
        const evo::Individual exact = solvers::solve_exact(scenario);
        return {exact.route.sequence, exact.omega};
    }
};

/// Applies order crossover to two randomly chosen parents; with fewer than
/// two parents it falls back to a uniformly random route. No omega claims.
class OxMock final : public engine::GeneratorPort {
public:
    explicit OxMock(std::uint64_t seed) : rng_(seed) {}

    std::vector<evo::CandidateIndividual> propose_initial(const wsn::Scenario& scenario,
                                                          std::size_t count) override {
        std::vector<evo::CandidateIndividual> candidates;
        candidates.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            candidates.push_back({solvers::random_route(scenario.node_count(), rng_).sequence, {}});
        }
        return candidates;
    }

    engine::ProposalResult propose_offspring(const wsn::Scenario& scenario,
                                             const std::vector<evo::Individual>& parents,
                                             const std::optional<evo::VerificationError>&) override {
        if (parents.empty()) {
            return evo::CandidateIndividual{
                solvers::random_route(scenario.node_count(), rng_).sequence, {}};
        }
        if (parents.size() == 1) {
            return evo::CandidateIndividual{parents.front().route.sequence, {}};
        }
        const std::size_t a = rng_.index(parents.size());
        std::size_t b = rng_.index(parents.size() - 1);
        if (b >= a) ++b;
        const wsn::Route child =
            solvers::order_crossover(parents[a].route, parents[b].route, rng_);
        return evo::CandidateIndividual{child.sequence, {}};
    }

private:
    util::Rng rng_;
};

/// Wraps another generator and, with the given probability, corrupts each
/// candidate so it fails verification (typically by duplicating one
/// interior node).
class FaultyMock final : public engine::GeneratorPort {
public:
    FaultyMock(std::unique_ptr<engine::GeneratorPort> inner, double rate, std::uint64_t seed)
        : inner_(std::move(inner)), rate_(rate), rng_(seed) {
        if (!inner_) throw std::invalid_argument("FaultyMock: inner generator is null");
        if (!(rate >= 0.0 && rate <= 1.0)) {
            throw std::invalid_argument("FaultyMock: rate must be in [0, 1]");
        }
    }

    std::vector<evo::CandidateIndividual> propose_initial(const wsn::Scenario& scenario,
                                                          std::size_t count) override {
        auto candidates = inner_->propose_initial(scenario, count);
        for (evo::CandidateIndividual& candidate : candidates) {
            if (rng_.bernoulli(rate_)) corrupt(candidate);
        }
        return candidates;
    }

    engine::ProposalResult propose_offspring(
        const wsn::Scenario& scenario, const std::vector<evo::Individual>& parents,
        const std::optional<evo::VerificationError>& feedback) override {
        engine::ProposalResult result = inner_->propose_offspring(scenario, parents, feedback);
        if (auto* candidate = std::get_if<evo::CandidateIndividual>(&result)) {
            if (rng_.bernoulli(rate_)) corrupt(*candidate);
        }
        return result;
    }

private:
    void corrupt(evo::CandidateIndividual& candidate) {
        auto& seq = candidate.route_claim;
        if (seq.size() >= 4) {
            const std::size_t interior = seq.size() - 2;
            const std::size_t a = 1 + rng_.index(interior);
            std::size_t b = 1 + rng_.index(interior - 1);
            if (b >= a) ++b;
            seq[a] = seq[b];
        } else if (seq.size() == 3) {
            seq.front() = seq[1];
        } else {
            seq.push_back(0);
        }
    }

    std::unique_ptr<engine::GeneratorPort> inner_;
    double rate_;
    util::Rng rng_;
};

/// Emits a rotating mix of valid-but-arbitrary routes, structural faults,
/// false omega claims, and outright refusals, for exercising engine
/// invariants under hostile input.
class AdversarialMock final : public engine::GeneratorPort {
public:
    explicit AdversarialMock(std::uint64_t seed) : rng_(seed) {}

    std::vector<evo::CandidateIndividual> propose_initial(const wsn::Scenario& scenario,
                                                          std::size_t count) override {
        std::vector<evo::CandidateIndividual> candidates;
        candidates.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            engine::ProposalResult mischief = propose_offspring(scenario, {}, {});
            if (auto* candidate = std::get_if<evo::CandidateIndividual>(&mischief)) {
                candidates.push_back(std::move(*candidate));
            } else {
                candidates.push_back({{0, 0}, {}});
            }
        }
        return candidates;
    }

    engine::ProposalResult propose_offspring(const wsn::Scenario& scenario,
                                             const std::vector<evo::Individual>&,
                                             const std::optional<evo::VerificationError>&) override {
        evo::CandidateIndividual candidate{
            solvers::random_route(scenario.node_count(), rng_).sequence, {}};
        auto& seq = candidate.route_claim;
        switch (rng_.index(6)) {
        case 0:
            break;
        case 1:
            seq.front() = seq[1];
            break;
        case 2:
            if (seq.size() >= 4) seq[1] = seq[2];
            break;
        case 3:
            seq.pop_back();
            break;
        case 4:
            candidate.omega_claim = 1.0 + rng_.uniform(0.0, 1e6);
            break;
        default:
            return evo::VerificationError{evo::FaultKind::Unparseable,
                                          "no bracketed route found in response: \"I refuse.\""};
        }
        return candidate;
    }

private:
    util::Rng rng_;
};

/// Builds a mock from a designation string: "perfect", "ox:SEED",
/// "faulty:RATE:SEED" (over an OX inner generator), "adversarial:SEED".
/// Seeds default to 0 when omitted.
inline std::unique_ptr<engine::GeneratorPort> make_mock_generator(const std::string& designation) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = designation.find(':', start);
        parts.push_back(designation.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }

    auto seed_at = [&parts](std::size_t index) -> std::uint64_t {
        return index < parts.size() ? std::stoull(parts[index]) : 0;
    };

    if (parts[0] == "perfect") return std::make_unique<PerfectMock>();
    if (parts[0] == "ox") return std::make_unique<OxMock>(seed_at(1));
    if (parts[0] == "adversarial") return std::make_unique<AdversarialMock>(seed_at(1));
    if (parts[0] == "faulty") {
        if (parts.size() < 2) {
            throw std::invalid_argument("make_mock_generator: faulty needs a rate, e.g. faulty:0.5:7");
        }
        const double rate = std::stod(parts[1]);
        const std::uint64_t seed = seed_at(2);
        return std::make_unique<FaultyMock>(
            std::make_unique<OxMock>(util::derive_seed(seed, {1})), rate, seed);
    }
    throw std::invalid_argument("make_mock_generator: unknown designation \"" + designation +
                                "\"; expected perfect, ox:SEED, faulty:RATE:SEED, or "
                                "adversarial:SEED");
}

} // namespace laura::llm
