#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "laura/evo/types.hpp"
#include "laura/wsn/model.hpp"

namespace laura::llm {

enum class SectionLabel { TaskDescription, ParentSolutions, Hints };

inline const char* to_string(SectionLabel label) {
    switch (label) {
    case SectionLabel::TaskDescription: return "Task description";
    case SectionLabel::ParentSolutions: return "Parent solutions";
    case SectionLabel::Hints: return "Hints";
    }
    return "?";
}

struct PromptSection {
    SectionLabel label;
    std::string text;
};

/// An ordered, labeled prompt plus its rendered text. Rendering is a pure
/// function of the sections, so identical inputs always produce identical
/// prompts.
struct PromptDocument {
    std::vector<PromptSection> sections;
    std::string rendered;
};

namespace detail {

inline std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string format_omega(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline PromptDocument assemble(std::vector<PromptSection> sections) {
    PromptDocument doc;
    doc.sections = std::move(sections);
    for (const PromptSection& section : doc.sections) {
        doc.rendered += "## ";
        doc.rendered += to_string(section.label);
        doc.rendered += "\n";
        doc.rendered += section.text;
        doc.rendered += "\n\n";
    }
    return doc;
}

inline std::string task_description(const wsn::Scenario& scenario) {
    std::string text =
        "A UAV starts at the data center, visits every sensor node exactly once to "
        "collect its data, and returns to the data center. The age of information of "
        "a node is the time from the UAV's arrival at that node until the mission "
        "ends, so the first node visited ages the longest. Find the visiting order "
        "that minimizes the maximum age of information; equivalently, minimize the "
        "total travel time from the first sensor node through the return to the data "
        "center. The UAV flies straight lines at " +
        format_coord(scenario.uav_speed_mps) + " m/s at altitude " +
        format_coord(scenario.uav_altitude_m) + " m.\n\n";
    text += "Data center 0: (" + format_coord(scenario.data_center.x) + ", " +
            format_coord(scenario.data_center.y) + ")\n";
    text += "Sensor nodes:\n";
    for (const wsn::SensorNode& node : scenario.nodes) {
        text += std::to_string(node.id) + ": (" + format_coord(node.position.x) + ", " +
                format_coord(node.position.y) + ")\n";
    }
    text +=
        "\nWrite a route as a bracketed list of ids that starts and ends at 0 and "
        "contains every sensor node id exactly once, for example [0, 2, 1, 0].";
    return text;
}

inline const char* depot_rule() {
    return "Every route must start and end at the data center, id 0.";
}

} // namespace detail

/// Renders a route in the exchange format, e.g. "[0, 2, 1, 0]".
inline std::string render_route(const std::vector<wsn::NodeId>& sequence) {
    std::string out = "[";
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(sequence[i]);
    }
    out += "]";
    return out;
}

inline std::string render_route(const wsn::Route& route) { return render_route(route.sequence); }

/// The initialization prompt: task description plus hints asking for
/// `count` distinct routes, one bracketed list per line.
inline PromptDocument build_init_prompt(const wsn::Scenario& scenario, std::size_t count) {
    std::string hints =
        "Propose " + std::to_string(count) +
        " distinct routes, each on its own line as a single bracketed list of ids. "
        "Spread them across the search space rather than clustering near one "
        "ordering.\n";
    hints += detail::depot_rule();
    return detail::assemble({{SectionLabel::TaskDescription, detail::task_description(scenario)},
                             {SectionLabel::Hints, std::move(hints)}});
}

/// The evolution prompt: task description, the parent routes with their
/// objective values, and hints asking for one recombined offspring.
inline PromptDocument build_evolution_prompt(const wsn::Scenario& scenario,
                                             const std::vector<evo::Individual>& parents) {
    if (parents.empty()) {
        throw std::invalid_argument("build_evolution_prompt: parents must be non-empty");
    }
    std::string parent_text = "Each line is a parent route followed by its maximum age of "
                              "information in seconds (lower is better):\n";
    for (const evo::Individual& parent : parents) {
        parent_text += render_route(parent.route) + " omega " + detail::format_omega(parent.omega) + "\n";
    }
    std::string hints =
        "Recombine the parents: keep their strong sub-sequences and splice them "
        "together, crossover style. Output exactly one new route as a single "
        "bracketed list of ids, different from every parent.\n";
    hints += detail::depot_rule();
    return detail::assemble({{SectionLabel::TaskDescription, detail::task_description(scenario)},
                             {SectionLabel::ParentSolutions, std::move(parent_text)},
                             {SectionLabel::Hints, std::move(hints)}});
}

/// Extends a prompt with the verification error from the previous attempt.
/// Applying it repeatedly appends one rejection line per failed attempt, in
/// order, without disturbing the section structure.
inline PromptDocument build_retry_prompt(const PromptDocument& previous,
                                         const evo::VerificationError& error) {
    if (error.detail.empty()) {
        throw std::invalid_argument("build_retry_prompt: error detail must be non-empty");
    }
    std::vector<PromptSection> sections = previous.sections;
    const std::string line = "Your previous route was rejected: " + error.detail +
                             " Fix this and output one corrected route in the same format.";
    bool appended = false;
    for (PromptSection& section : sections) {
        if (section.label == SectionLabel::Hints) {
            section.text += "\n" + line;
            appended = true;
            break;
        }
    }
    if (!appended) sections.push_back({SectionLabel::Hints, line});
    return detail::assemble(std::move(sections));
}

} // namespace laura::llm
