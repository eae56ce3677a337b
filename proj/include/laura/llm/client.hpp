#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <nlohmann/json.hpp>

namespace laura::llm {

/// Where and how to reach an OpenAI-compatible chat-completions endpoint.
/// The credential itself is read from the named environment variable at
/// call time and is never stored or logged.
struct LlmEndpointConfig {
    std::string base_url;
    std::string model_name;
    double temperature = 0.7;
    double timeout_s = 60.0;
    std::string api_key_env_var = "LAURA_API_KEY";
    int transport_retries = 2;     ///< extra attempts after transport or timeout failures
    double retry_backoff_s = 0.5;  ///< first backoff; doubles per retry, jittered
};

struct ChatMessage {
    std::string role; ///< one of system, user, assistant
    std::string content;
};

struct TokenCounts {
    std::int64_t prompt = 0;
    std::int64_t completion = 0;
};

/// One request/response round trip.
struct ChatExchange {
    std::vector<ChatMessage> request_messages;
    std::string response_text;
    double latency_s = 0.0;
    std::optional<TokenCounts> token_counts;
};

class LlmError : public std::runtime_error {
public:
    enum class Kind {
        Credential,       ///< API key environment variable missing or empty
        Transport,        ///< connection could not be established or broke mid-flight
        Timeout,          ///< no response within the configured timeout
        HttpStatus,       ///< non-2xx status; message carries a body excerpt
        MalformedResponse ///< 2xx body that is not a chat completion
    };

    LlmError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

namespace detail {

struct SplitUrl {
    std::string origin; ///< scheme://host[:port]
    std::string path;   ///< leading path, no trailing slash
};

inline SplitUrl split_base_url(const std::string& base_url) {
    const std::size_t scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos) {
        throw LlmError(LlmError::Kind::Transport,
                       "base_url must include a scheme, e.g. https://host: got \"" + base_url +
                           "\"");
    }
    const std::string scheme = base_url.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") {
        throw LlmError(LlmError::Kind::Transport, "unsupported scheme \"" + scheme + "\"");
    }
    const std::size_t path_start = base_url.find('/', scheme_end + 3);
    SplitUrl split;
    if (path_start == std::string::npos) {
        split.origin = base_url;
    } else {
        split.origin = base_url.substr(0, path_start);
        split.path = base_url.substr(path_start);
    }
    while (!split.path.empty() && split.path.back() == '/') split.path.pop_back();
    return split;
}

inline std::string body_excerpt(const std::string& body, std::size_t limit = 200) {
    std::string out = body.substr(0, limit);
    for (char& c : out) {
        if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    }
    return out;
}

inline double retry_jitter() {
    thread_local std::mt19937_64 rng{std::random_device{}()};
    return 0.75 + 0.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

} // namespace detail

/// One blocking POST to {base_url}/chat/completions, with transport-level
/// retries (exponential backoff, jittered) that are invisible to callers.
/// Throws LlmError; never logs or embeds the credential.
inline ChatExchange chat_complete(const LlmEndpointConfig& config,
                                  std::vector<ChatMessage> messages) {
    for (const ChatMessage& message : messages) {
        if (message.role != "system" && message.role != "user" && message.role != "assistant") {
            throw std::invalid_argument("chat_complete: unknown role \"" + message.role + "\"");
        }
    }
    const char* key = std::getenv(config.api_key_env_var.c_str());
    if (key == nullptr || key[0] == '\0') {
        throw LlmError(LlmError::Kind::Credential, "environment variable " +
                                                       config.api_key_env_var +
                                                       " is not set; it must hold the API key");
    }

    const detail::SplitUrl url = detail::split_base_url(config.base_url);
    const std::string endpoint = url.path + "/chat/completions";

    nlohmann::json body;
    body["model"] = config.model_name;
    body["temperature"] = config.temperature;
    auto& wire_messages = body["messages"] = nlohmann::json::array();
    for (const ChatMessage& message : messages) {
        wire_messages.push_back({{"role", message.role}, {"content", message.content}});
    }
    const std::string payload = body.dump();

    const httplib::Headers headers = {{"Authorization", std::string("Bearer ") + key}};

    const auto started = std::chrono::steady_clock::now();
    auto elapsed = [&started] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };

    httplib::Result result;
    for (int attempt = 0;; ++attempt) {
        httplib::Client client(url.origin);
        client.set_connection_timeout(std::chrono::duration<double>(config.timeout_s));
        client.set_read_timeout(std::chrono::duration<double>(config.timeout_s));
        client.set_write_timeout(std::chrono::duration<double>(config.timeout_s));

        result = client.Post(endpoint, headers, payload, "application/json");
        if (result) break;

        const httplib::Error error = result.error();
        const bool timed_out = error == httplib::Error::ConnectionTimeout ||
                               error == httplib::Error::Read || error == httplib::Error::Write;
        if (attempt >= config.transport_retries) {
            if (timed_out) {
                throw LlmError(LlmError::Kind::Timeout,
                               "no response from " + url.origin + endpoint + " within " +
                                   std::to_string(config.timeout_s) + " s (" +
                                   httplib::to_string(error) + ")");
            }
            throw LlmError(LlmError::Kind::Transport, "request to " + url.origin + endpoint +
                                                          " failed: " + httplib::to_string(error));
        }
        const double backoff =
            config.retry_backoff_s * std::ldexp(1.0, attempt) * detail::retry_jitter();
        std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
    }

    if (result->status < 200 || result->status >= 300) {
        throw LlmError(LlmError::Kind::HttpStatus,
                       "HTTP " + std::to_string(result->status) + " from " + endpoint + ": " +
                           detail::body_excerpt(result->body));
    }

    const nlohmann::json response = nlohmann::json::parse(result->body, nullptr, false);
    if (response.is_discarded()) {
        throw LlmError(LlmError::Kind::MalformedResponse,
                       "response body is not JSON: " + detail::body_excerpt(result->body));
    }
    if (!response.contains("choices") || !response["choices"].is_array() ||
        response["choices"].empty() || !response["choices"][0].contains("message") ||
        !response["choices"][0]["message"].contains("content") ||
        !response["choices"][0]["message"]["content"].is_string()) {
        throw LlmError(LlmError::Kind::MalformedResponse,
                       "response lacks choices[0].message.content: " +
                           detail::body_excerpt(result->body));
    }

    ChatExchange exchange;
    exchange.request_messages = std::move(messages);
    exchange.response_text = response["choices"][0]["message"]["content"].get<std::string>();
    exchange.latency_s = elapsed();
    if (response.contains("usage") && response["usage"].is_object()) {
        const auto& usage = response["usage"];
        TokenCounts counts;
        counts.prompt = usage.value("prompt_tokens", std::int64_t{0});
        counts.completion = usage.value("completion_tokens", std::int64_t{0});
        exchange.token_counts = counts;
    }
    return exchange;
}

} // namespace laura::llm
