#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/wsn/model.hpp"

namespace laura::llm {

using ParseResult = std::variant<evo::CandidateIndividual, evo::VerificationError>;

namespace detail {

struct BracketedList {
    std::vector<wsn::NodeId> ids;
    std::size_t begin = 0; ///< offset of '['
    std::size_t end = 0;   ///< offset one past ']'
};

inline bool parse_int_token(std::string_view token, wsn::NodeId& out) {
    std::size_t lo = 0;
    std::size_t hi = token.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(token[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(token[hi - 1]))) --hi;
    if (lo == hi) return false;
    const char* first = token.data() + lo;
    const char* last = token.data() + hi;
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

/// Every well-formed bracketed integer list in the text, in order of
/// appearance. Brackets whose content is not a comma-separated integer list
/// are skipped, and a '[' inside such content is still considered as a
/// fresh list start.
inline std::vector<BracketedList> find_bracketed_lists(std::string_view text) {
    std::vector<BracketedList> lists;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t open = text.find('[', pos);
        if (open == std::string_view::npos) break;
        const std::size_t close = text.find(']', open + 1);
        if (close == std::string_view::npos) break;

        const std::string_view body = text.substr(open + 1, close - open - 1);
        std::vector<wsn::NodeId> ids;
        bool ok = !body.empty();
        std::size_t start = 0;
        while (ok && start <= body.size()) {
            std::size_t comma = body.find(',', start);
            if (comma == std::string_view::npos) comma = body.size();
            wsn::NodeId id = 0;
            ok = parse_int_token(body.substr(start, comma - start), id);
            if (ok) ids.push_back(id);
            start = comma + 1;
        }
        if (ok && !ids.empty()) {
            lists.push_back({std::move(ids), open, close + 1});
            pos = close + 1;
        } else {
            pos = open + 1;
        }
    }
    return lists;
}

inline std::optional<double> parse_number_at(std::string_view text, std::size_t pos) {
    static constexpr std::string_view kSkip = " \t:=~*";
    std::size_t skipped = 0;
    while (pos < text.size() && skipped < 8 && kSkip.find(text[pos]) != std::string_view::npos) {
        ++pos;
        ++skipped;
    }
    if (pos >= text.size()) return std::nullopt;
    const char c = text[pos];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.')) {
        return std::nullopt;
    }
    double value = 0.0;
    const char* first = text.data() + pos;
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == first) return std::nullopt;
    return value;
}

/// Looks for an "omega"/"AoI" numeric annotation adjacent to the chosen
/// list: the nearest one after it, then the nearest one before it.
inline std::optional<double> find_omega_claim(std::string_view text, const BracketedList& list) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    std::vector<std::size_t> after;
    std::vector<std::size_t> before;
    for (const std::string_view keyword : {std::string_view("omega"), std::string_view("aoi")}) {
        std::size_t pos = 0;
        while ((pos = lowered.find(keyword, pos)) != std::string::npos) {
            (pos >= list.end ? after : before).push_back(pos + keyword.size());
            ++pos;
        }
    }
    std::sort(after.begin(), after.end());
    std::sort(before.rbegin(), before.rend());
    for (const std::size_t candidate : after) {
        if (auto value = parse_number_at(text, candidate)) return value;
    }
    for (const std::size_t candidate : before) {
        if (auto value = parse_number_at(text, candidate)) return value;
    }
    return std::nullopt;
}

inline std::string excerpt(std::string_view text, std::size_t limit = 200) {
    std::string out(text.substr(0, limit));
    for (char& c : out) {
        if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    }
    return out;
}

/// A bare permutation of length n is wrapped with depot endpoints; anything
/// else is passed through for verify() to judge.
inline std::vector<wsn::NodeId> wrap_if_bare(std::vector<wsn::NodeId> ids, int n) {
    if (static_cast<int>(ids.size()) == n) {
        ids.insert(ids.begin(), 0);
        ids.push_back(0);
    }
    return ids;
}

} // namespace detail

/// Extracts the last bracketed integer list in `text` as a route claim,
/// tolerating surrounding prose and code fences, plus an adjacent
/// "omega"/"AoI" value if one is present. Structural validity is left to
/// verify(); only list-ness is required here.
inline ParseResult parse_route_response(const std::string& text, int n) {
    const auto lists = detail::find_bracketed_lists(text);
    if (lists.empty()) {
        return evo::VerificationError{evo::FaultKind::Unparseable,
                                      "no bracketed route found in response: \"" +
                                          detail::excerpt(text) + "\""};
    }
    const detail::BracketedList& chosen = lists.back();
    evo::CandidateIndividual candidate;
    candidate.route_claim = detail::wrap_if_bare(chosen.ids, n);
    candidate.omega_claim = detail::find_omega_claim(text, chosen);
    return candidate;
}

/// Extracts every bracketed list as one candidate each, for prompts that
/// request several routes. Omega annotations are ignored in this form.
inline std::vector<evo::CandidateIndividual> parse_route_responses(const std::string& text, int n) {
    std::vector<evo::CandidateIndividual> candidates;
    for (const detail::BracketedList& list : detail::find_bracketed_lists(text)) {
        evo::CandidateIndividual candidate;
        candidate.route_claim = detail::wrap_if_bare(list.ids, n);
        candidates.push_back(std::move(candidate));
    }
    return candidates;
}

} // namespace laura::llm
