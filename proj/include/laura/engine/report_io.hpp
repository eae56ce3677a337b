#pragma once

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "laura/engine/laura.hpp"
#include "laura/evo/types.hpp"
#include "laura/evo/verify.hpp"
#include "laura/util/format.hpp"

namespace laura::engine {

/// How best_trace lines up with attempts: the evolutionary loop records one
/// trace entry per iteration after a post-initialization entry, while
/// direct sampling appends a running best from the first valid sample on.
enum class TraceScheme { Evolution, DirectSampling };

inline nlohmann::json individual_to_json(const evo::Individual& individual) {
    return {{"route", individual.route.sequence},
            {"omega", individual.omega},
            {"fitness", evo::fitness(individual.omega)}};
}

inline std::string outcome_string(const AttemptLog& attempt) {
    if (attempt.outcome == AttemptOutcome::Accepted) return "accepted";
    std::string out = "rejected(";
    out += attempt.reject_kind ? evo::to_string(*attempt.reject_kind) : "Unknown";
    out += ")";
    return out;
}

inline nlohmann::json report_to_json(const SolverReport& report) {
    nlohmann::json doc;
    if (report.best) {
        doc["best"] = individual_to_json(*report.best);
    } else {
        doc["best"] = nullptr;
    }
    doc["best_trace"] = report.best_trace;
    doc["hallucination_rate"] = report.hallucination_rate;
    doc["init_proposals"] = report.init_proposals;
    doc["init_rejections"] = report.init_rejections;

    auto& attempts = doc["attempts"] = nlohmann::json::array();
    for (const AttemptLog& attempt : report.attempts) {
        attempts.push_back({{"iteration", attempt.iteration},
                            {"attempt", attempt.attempt},
                            {"outcome", outcome_string(attempt)},
                            {"latency_s", attempt.latency_s}});
    }

    auto& population = doc["final_population"] = nlohmann::json::array();
    for (const evo::Individual& member : report.final_population) {
        population.push_back(individual_to_json(member));
    }
    return doc;
}

/// Per-attempt trace: `iteration,attempt,outcome,best_omega`, where
/// best_omega is the incumbent best after the attempt (empty while no valid
/// candidate exists yet under direct sampling).
inline std::string trace_to_csv(const SolverReport& report, TraceScheme scheme) {
    std::string csv = "iteration,attempt,outcome,best_omega\n";

    std::size_t first_valid = 0;
    if (scheme == TraceScheme::DirectSampling) {
        first_valid = report.attempts.size() + 1;
        for (const AttemptLog& attempt : report.attempts) {
            if (attempt.outcome == AttemptOutcome::Accepted) {
                first_valid = attempt.iteration;
                break;
            }
        }
    }

    for (const AttemptLog& attempt : report.attempts) {
        csv += std::to_string(attempt.iteration);
        csv += ',';
        csv += std::to_string(attempt.attempt);
        csv += ',';
        csv += outcome_string(attempt);
        csv += ',';
        if (scheme == TraceScheme::Evolution) {
            const std::size_t index = attempt.outcome == AttemptOutcome::Accepted
                                          ? attempt.iteration
                                          : attempt.iteration - 1;
            csv += util::to_shortest(report.best_trace.at(index));
        } else if (attempt.iteration >= first_valid) {
            csv += util::to_shortest(report.best_trace.at(attempt.iteration - first_valid));
        }
        csv += '\n';
    }
    return csv;
}

inline void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void save_report_file(const std::string& path, const SolverReport& report) {
    save_text_file(path, report_to_json(report).dump(2) + "\n");
}

inline void save_trace_file(const std::string& path, const SolverReport& report,
                            TraceScheme scheme) {
    save_text_file(path, trace_to_csv(report, scheme));
}

} // namespace laura::engine
