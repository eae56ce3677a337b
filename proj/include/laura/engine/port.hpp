#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/wsn/model.hpp"

namespace laura::engine {

/// A proposal either parsed into a candidate or failed before verification
/// (unparseable output, transport trouble); the engine records the latter as
/// a rejected attempt.
using ProposalResult = std::variant<evo::CandidateIndividual, evo::VerificationError>;

/// The engine's only view of a language model (or a mock standing in for
/// one). Implementations may keep conversation state but must not mutate
/// their inputs.
class GeneratorPort {
public:
    virtual ~GeneratorPort() = default;

    /// Requests `count` fresh candidate routes for the scenario. May return
    /// fewer than requested; the caller decides how to fill the gap.
    virtual std::vector<evo::CandidateIndividual> propose_initial(const wsn::Scenario& scenario,
                                                                  std::size_t count) = 0;

    /// Requests one offspring recombining the given parents. When the
    /// previous attempt failed verification, `feedback` carries that error
    /// so the generator can correct course.
    virtual ProposalResult propose_offspring(
        const wsn::Scenario& scenario, const std::vector<evo::Individual>& parents,
        const std::optional<evo::VerificationError>& feedback) = 0;
};

} // namespace laura::engine
