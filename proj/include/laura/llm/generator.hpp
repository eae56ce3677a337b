#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laura/engine/port.hpp"
#include "laura/evo/types.hpp"
#include "laura/llm/client.hpp"
#include "laura/llm/parse.hpp"
#include "laura/llm/prompt.hpp"
#include "laura/wsn/model.hpp"

namespace laura::llm {

/// GeneratorPort backed by a live chat-completions endpoint. Offspring
/// retries extend the previous prompt with the verification error, so the
/// model sees what went wrong. Transport problems propagate as LlmError;
/// the engine treats them like any other failed attempt.
class LlmGenerator final : public engine::GeneratorPort {
public:
    explicit LlmGenerator(LlmEndpointConfig config,
                          std::string system_preamble =
                              "You plan UAV data-collection routes. Follow the output format "
                              "exactly; reply with routes as bracketed id lists.")
        : config_(std::move(config)), system_preamble_(std::move(system_preamble)) {}

    std::vector<evo::CandidateIndividual> propose_initial(const wsn::Scenario& scenario,
                                                          std::size_t count) override {
        const PromptDocument prompt = build_init_prompt(scenario, count);
        const ChatExchange exchange = exchange_for(prompt);
        auto candidates = parse_route_responses(exchange.response_text, scenario.node_count());
        if (candidates.size() > count) candidates.resize(count);
        return candidates;
    }

    engine::ProposalResult propose_offspring(
        const wsn::Scenario& scenario, const std::vector<evo::Individual>& parents,
        const std::optional<evo::VerificationError>& feedback) override {
        if (feedback.has_value() && last_prompt_.has_value()) {
            last_prompt_ = build_retry_prompt(*last_prompt_, *feedback);
        } else {
            last_prompt_ = build_evolution_prompt(scenario, parents);
        }
        const ChatExchange exchange = exchange_for(*last_prompt_);
        return parse_route_response(exchange.response_text, scenario.node_count());
    }

    const LlmEndpointConfig& config() const { return config_; }

private:
    ChatExchange exchange_for(const PromptDocument& prompt) {
        return chat_complete(config_, {{"system", system_preamble_}, {"user", prompt.rendered}});
    }

    LlmEndpointConfig config_;
    std::string system_preamble_;
    std::optional<PromptDocument> last_prompt_;
};

} // namespace laura::llm
