#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <memory>
#include <optional>
#include <semaphore>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "laura/bench/plot.hpp"
#include "laura/bench/stats.hpp"
#include "laura/bench/toml.hpp"
#include "laura/engine/laura.hpp"
#include "laura/engine/port.hpp"
#include "laura/engine/report_io.hpp"
#include "laura/llm/generator.hpp"
#include "laura/llm/mocks.hpp"
#include "laura/solvers/exact.hpp"
#include "laura/solvers/genetic.hpp"
#include "laura/solvers/greedy.hpp"
#include "laura/solvers/random.hpp"
#include "laura/util/format.hpp"
#include "laura/util/rng.hpp"
#include "laura/wsn/generate.hpp"
#include "laura/wsn/model.hpp"
#include "laura/wsn/scenario_io.hpp"

namespace laura::bench {

enum class Algo { Laura, Ledma, Genetic, Greedy, Random, Exact };

inline const char* to_string(Algo algo) {
    switch (algo) {
    case Algo::Laura: return "laura";
    case Algo::Ledma: return "ledma";
    case Algo::Genetic: return "genetic";
    case Algo::Greedy: return "greedy";
    case Algo::Random: return "random";
    case Algo::Exact: return "exact";
    }
    return "?";
}

inline Algo algo_from_string(const std::string& name) {
    if (name == "laura") return Algo::Laura;
    if (name == "ledma") return Algo::Ledma;
    if (name == "genetic") return Algo::Genetic;
    if (name == "greedy") return Algo::Greedy;
    if (name == "random") return Algo::Random;
    if (name == "exact") return Algo::Exact;
    throw std::invalid_argument("unknown algorithm \"" + name +
                                "\"; expected laura, ledma, genetic, greedy, random, or exact");
}

/// Full experiment description: the protocol grid, scenario generation
/// parameters, and per-algorithm settings. LLM-backed algorithms run
/// against a mock designation ("perfect", "ox[:SEED]", "faulty:RATE[:SEED]",
/// "adversarial[:SEED]") or "llm" for a live endpoint.
struct SuiteConfig {
    std::vector<int> node_counts;
    int cases_per_count = 10;
    int runs_per_case = 5;
    std::vector<Algo> algorithms;
    std::uint64_t base_seed = 0;
    int workers = 1;

    double radius_m = 3000.0;
    wsn::ScenarioDefaults scenario;

    engine::LauraConfig laura;
    std::string laura_generator = "ox";
    std::size_t ledma_samples = 1;
    std::string ledma_generator = "ox";
    solvers::GeneticConfig genetic;
    int exact_cap = 18;

    llm::LlmEndpointConfig endpoint;
    int llm_concurrency = 1;

    bool emit_plots = false;
};

/// One CSV row: `algorithm,n,case,run,seed,best_omega,travel_objective,
/// epsilon,wall_time_s,failed`. Case and run indices are 0-based. Failed
/// runs carry NaN in the numeric result fields, emitted as empty cells.
struct RunRecord {
    Algo algorithm = Algo::Greedy;
    int n = 0;
    int case_index = 0;
    int run_index = 0;
    std::uint64_t seed = 0;
    double best_omega = std::numeric_limits<double>::quiet_NaN();
    double travel_objective = std::numeric_limits<double>::quiet_NaN();
    double epsilon = std::numeric_limits<double>::quiet_NaN();
    double wall_time_s = 0.0;
    bool failed = false;

    std::vector<wsn::NodeId> best_route; ///< for plotting; not a CSV column
};

struct GroupSummary {
    Algo algorithm = Algo::Greedy;
    int n = 0;
    double mean_omega = std::numeric_limits<double>::quiet_NaN();
    double variance_omega = std::numeric_limits<double>::quiet_NaN();
    double mean_epsilon = std::numeric_limits<double>::quiet_NaN();
    std::size_t runs = 0;
    std::size_t failed_runs = 0;
};

struct ExperimentSummary {
    std::vector<RunRecord> records; ///< canonical order: node count, case, algorithm, run
    std::vector<GroupSummary> groups;
};

inline void validate_config(const SuiteConfig& config) {
    if (config.node_counts.empty()) {
        throw std::invalid_argument("SuiteConfig: node_counts must be non-empty");
    }
    for (const int n : config.node_counts) {
        if (n < 1) throw std::invalid_argument("SuiteConfig: node counts must be >= 1");
    }
    if (config.cases_per_count < 1 || config.runs_per_case < 1) {
        throw std::invalid_argument("SuiteConfig: cases_per_count and runs_per_case must be >= 1");
    }
    if (config.algorithms.empty()) {
        throw std::invalid_argument("SuiteConfig: algorithms must be non-empty");
    }
    if (config.workers < 1 || config.llm_concurrency < 1) {
        throw std::invalid_argument("SuiteConfig: workers and llm_concurrency must be >= 1");
    }
    for (const Algo algo : config.algorithms) {
        if (algo != Algo::Exact) continue;
        for (const int n : config.node_counts) {
            if (n > config.exact_cap) {
                throw std::invalid_argument(
                    "SuiteConfig: exact solver scheduled for N=" + std::to_string(n) +
                    " beyond its cap of " + std::to_string(config.exact_cap));
            }
        }
    }
    solvers::validate_config(config.genetic);
    engine::validate_config(config.laura);
    if (config.ledma_samples < 1) {
        throw std::invalid_argument("SuiteConfig: ledma samples must be >= 1");
    }
}

namespace suite_detail {

/// Per-run generator. Mock seeds mix the designation seed with the run
/// seed, so runs are independent yet reproducible; "llm" uses the live
/// endpoint.
inline std::unique_ptr<engine::GeneratorPort> make_run_generator(
    const std::string& designation, const llm::LlmEndpointConfig& endpoint,
    std::uint64_t run_seed) {
    if (designation == "llm") return std::make_unique<llm::LlmGenerator>(endpoint);

    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = designation.find(':', start);
        parts.push_back(designation.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    auto seed_at = [&parts, run_seed](std::size_t index) {
        const std::uint64_t base = index < parts.size() ? std::stoull(parts[index]) : 0;
        return util::derive_seed(run_seed, {base});
    };

    if (parts[0] == "perfect") return std::make_unique<llm::PerfectMock>();
    if (parts[0] == "ox") return std::make_unique<llm::OxMock>(seed_at(1));
    if (parts[0] == "adversarial") return std::make_unique<llm::AdversarialMock>(seed_at(1));
    if (parts[0] == "faulty") {
        if (parts.size() < 2) {
            throw std::invalid_argument("generator designation: faulty needs a rate");
        }
        const double rate = std::stod(parts[1]);
        const std::uint64_t seed = seed_at(2);
        return std::make_unique<llm::FaultyMock>(
            std::make_unique<llm::OxMock>(util::derive_seed(seed, {1})), rate, seed);
    }
    throw std::invalid_argument("unknown generator designation \"" + designation + "\"");
}

inline bool uses_live_llm(const SuiteConfig& config, Algo algo) {
    return (algo == Algo::Laura && config.laura_generator == "llm") ||
           (algo == Algo::Ledma && config.ledma_generator == "llm");
}

} // namespace suite_detail

/// Executes one (scenario, algorithm, seed) cell.
inline RunRecord run_cell(const SuiteConfig& config, const wsn::Scenario& scenario, Algo algo,
                          int n, int case_index, int run_index) {
    RunRecord record;
    record.algorithm = algo;
    record.n = n;
    record.case_index = case_index;
    record.run_index = run_index;
    record.seed = util::derive_seed(
        config.base_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(case_index),
                           static_cast<std::uint64_t>(run_index), util::fnv1a(to_string(algo))});

    const auto started = std::chrono::steady_clock::now();
    try {
        std::optional<evo::Individual> best;
        double epsilon = 0.0;
        switch (algo) {
        case Algo::Greedy:
            best = solvers::solve_greedy(scenario);
            break;
        case Algo::Random: {
            util::Rng rng(record.seed);
            best = solvers::solve_random(scenario, rng);
            break;
        }
        case Algo::Genetic: {
            solvers::GeneticConfig genetic = config.genetic;
            genetic.seed = record.seed;
            best = solvers::solve_genetic(scenario, genetic).best;
            break;
        }
        case Algo::Exact:
            best = solvers::solve_exact(scenario, {config.exact_cap, config.exact_cap});
            break;
        case Algo::Laura: {
            engine::LauraConfig laura = config.laura;
            laura.seed = record.seed;
            auto generator = suite_detail::make_run_generator(config.laura_generator,
                                                              config.endpoint, record.seed);
            const engine::SolverReport report = engine::run_laura(scenario, laura, *generator);
            best = report.best;
            epsilon = report.hallucination_rate;
            break;
        }
        case Algo::Ledma: {
            auto generator = suite_detail::make_run_generator(config.ledma_generator,
                                                              config.endpoint, record.seed);
            const engine::SolverReport report =
                engine::run_ledma(scenario, config.ledma_samples, *generator);
            best = report.best;
            epsilon = report.hallucination_rate;
            break;
        }
        }
        if (best.has_value()) {
            record.best_omega = best->omega;
            record.travel_objective = wsn::route_objective(scenario, best->route);
            record.epsilon = epsilon;
            record.best_route = best->route.sequence;
        } else {
            record.failed = true;
            record.epsilon = epsilon;
        }
    } catch (const std::exception&) {
        record.failed = true;
    }
    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

/// Runs the whole grid: scenarios per (node count, case), every algorithm,
/// `runs_per_case` seeded runs each. Cells execute on up to `workers`
/// threads into preallocated slots, so the record order never depends on
/// scheduling; live-LLM cells additionally honor `llm_concurrency`.
inline ExperimentSummary run_experiment(const SuiteConfig& config) {
    validate_config(config);

    struct Cell {
        const wsn::Scenario* scenario;
        Algo algo;
        int n;
        int case_index;
        int run_index;
    };

    std::vector<wsn::Scenario> scenarios;
    scenarios.reserve(config.node_counts.size() * static_cast<std::size_t>(config.cases_per_count));
    std::vector<Cell> cells;
    for (const int n : config.node_counts) {
        for (int case_index = 0; case_index < config.cases_per_count; ++case_index) {
            scenarios.push_back(wsn::generate_scenario(
                n, config.radius_m, config.base_seed + static_cast<std::uint64_t>(case_index),
                config.scenario));
        }
    }
    std::size_t scenario_index = 0;
    for (const int n : config.node_counts) {
        for (int case_index = 0; case_index < config.cases_per_count; ++case_index) {
            const wsn::Scenario* scenario = &scenarios[scenario_index++];
            for (const Algo algo : config.algorithms) {
                for (int run_index = 0; run_index < config.runs_per_case; ++run_index) {
                    cells.push_back({scenario, algo, n, case_index, run_index});
                }
            }
        }
    }

    ExperimentSummary summary;
    summary.records.resize(cells.size());

    std::counting_semaphore<> llm_slots(config.llm_concurrency);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t index = next.fetch_add(1);
            if (index >= cells.size()) break;
            const Cell& cell = cells[index];
            const bool gated = suite_detail::uses_live_llm(config, cell.algo);
            if (gated) llm_slots.acquire();
            summary.records[index] =
                run_cell(config, *cell.scenario, cell.algo, cell.n, cell.case_index,
                         cell.run_index);
            if (gated) llm_slots.release();
        }
    };

    const std::size_t thread_count =
        std::min<std::size_t>(static_cast<std::size_t>(config.workers), cells.size());
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) threads.emplace_back(worker);
        for (std::thread& thread : threads) thread.join();
    }

    for (const Algo algo : config.algorithms) {
        for (const int n : config.node_counts) {
            GroupSummary group;
            group.algorithm = algo;
            group.n = n;
            std::vector<double> omegas;
            std::vector<double> epsilons;
            for (const RunRecord& record : summary.records) {
                if (record.algorithm != algo || record.n != n) continue;
                ++group.runs;
                if (record.failed) {
                    ++group.failed_runs;
                    continue;
                }
                omegas.push_back(record.best_omega);
                epsilons.push_back(record.epsilon);
            }
            if (!omegas.empty()) {
                const Summary omega_summary = summarize(omegas);
                group.mean_omega = omega_summary.mean;
                group.variance_omega = omega_summary.variance;
                group.mean_epsilon = summarize(epsilons).mean;
            }
            summary.groups.push_back(group);
        }
    }
    return summary;
}

inline std::string records_to_csv(const std::vector<RunRecord>& records) {
    std::string csv = "algorithm,n,case,run,seed,best_omega,travel_objective,epsilon,"
                      "wall_time_s,failed\n";
    auto cell = [](double value) { return std::isnan(value) ? std::string{} : util::to_shortest(value); };
    for (const RunRecord& record : records) {
        csv += to_string(record.algorithm);
        csv += ',';
        csv += std::to_string(record.n);
        csv += ',';
        csv += std::to_string(record.case_index);
        csv += ',';
        csv += std::to_string(record.run_index);
        csv += ',';
        csv += std::to_string(record.seed);
        csv += ',';
        csv += cell(record.best_omega);
        csv += ',';
        csv += cell(record.travel_objective);
        csv += ',';
        csv += cell(record.epsilon);
        csv += ',';
        csv += cell(record.wall_time_s);
        csv += ',';
        csv += record.failed ? '1' : '0';
        csv += '\n';
    }
    return csv;
}

inline std::vector<RunRecord> parse_records_csv(const std::string& csv) {
    std::istringstream stream(csv);
    std::string line;
    if (!std::getline(stream, line) ||
        line != "algorithm,n,case,run,seed,best_omega,travel_objective,epsilon,wall_time_s,failed") {
        throw std::invalid_argument("records CSV: missing or unexpected header");
    }
    std::vector<RunRecord> records;
    int line_number = 1;
    while (std::getline(stream, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 10) {
            throw std::invalid_argument("records CSV line " + std::to_string(line_number) +
                                        ": expected 10 fields, got " +
                                        std::to_string(fields.size()));
        }
        RunRecord record;
        record.algorithm = algo_from_string(fields[0]);
        record.n = std::stoi(fields[1]);
        record.case_index = std::stoi(fields[2]);
        record.run_index = std::stoi(fields[3]);
        record.seed = std::stoull(fields[4]);
        auto number = [](const std::string& field) {
            return field.empty() ? std::numeric_limits<double>::quiet_NaN()
                                 : util::parse_double(field);
        };
        record.best_omega = number(fields[5]);
        record.travel_objective = number(fields[6]);
        record.epsilon = number(fields[7]);
        record.wall_time_s = number(fields[8]);
        if (fields[9] != "0" && fields[9] != "1") {
            throw std::invalid_argument("records CSV line " + std::to_string(line_number) +
                                        ": failed flag must be 0 or 1");
        }
        record.failed = fields[9] == "1";
        records.push_back(std::move(record));
    }
    return records;
}

/// Summary JSON. Wall-clock never appears here, so reruns with
/// deterministic generators are byte-identical.
inline nlohmann::json summary_to_json(const SuiteConfig& config,
                                      const ExperimentSummary& summary) {
    nlohmann::json doc;
    doc["suite"] = {{"node_counts", config.node_counts},
                    {"cases_per_count", config.cases_per_count},
                    {"runs_per_case", config.runs_per_case},
                    {"base_seed", config.base_seed}};
    auto& algorithms = doc["suite"]["algorithms"] = nlohmann::json::array();
    for (const Algo algo : config.algorithms) algorithms.push_back(to_string(algo));

    auto& groups = doc["groups"] = nlohmann::json::array();
    for (const GroupSummary& group : summary.groups) {
        nlohmann::json entry = {{"algorithm", to_string(group.algorithm)},
                                {"n", group.n},
                                {"runs", group.runs},
                                {"failed_runs", group.failed_runs}};
        if (std::isnan(group.mean_omega)) {
            entry["mean_omega"] = nullptr;
            entry["variance_omega"] = nullptr;
            entry["mean_epsilon"] = nullptr;
        } else {
            entry["mean_omega"] = group.mean_omega;
            entry["variance_omega"] = group.variance_omega;
            entry["mean_epsilon"] = group.mean_epsilon;
        }
        groups.push_back(std::move(entry));
    }
    return doc;
}

/// Writes records.csv, summary.json, and (opt-in) per-run route plots
/// under `out_dir`.
inline void write_experiment_artifacts(const std::string& out_dir, const SuiteConfig& config,
                                       const ExperimentSummary& summary) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    engine::save_text_file((fs::path(out_dir) / "records.csv").string(),
                           records_to_csv(summary.records));
    engine::save_text_file((fs::path(out_dir) / "summary.json").string(),
                           summary_to_json(config, summary).dump(2) + "\n");
    if (!config.emit_plots) return;

    fs::create_directories(fs::path(out_dir) / "plots");
    for (const RunRecord& record : summary.records) {
        if (record.failed || record.best_route.empty()) continue;
        const wsn::Scenario scenario = wsn::generate_scenario(
            record.n, config.radius_m,
            config.base_seed + static_cast<std::uint64_t>(record.case_index), config.scenario);
        const std::string name = std::string(to_string(record.algorithm)) + "-n" +
                                 std::to_string(record.n) + "-c" +
                                 std::to_string(record.case_index) + "-r" +
                                 std::to_string(record.run_index) + ".svg";
        plot_route(scenario, wsn::Route{record.best_route},
                   (fs::path(out_dir) / "plots" / name).string());
    }
}

/// Applies the per-algorithm TOML sections ([laura], [ledma], [genetic],
/// [exact], [llm], [output]) over the defaults already in `config`. Shared
/// by the suite loader and the single-solve config path.
inline void apply_solver_sections(const TomlDocument& doc, SuiteConfig& config) {
    config.laura.population_size =
        static_cast<std::size_t>(doc.get_int_or("laura.population_size", 10));
    config.laura.parent_count = static_cast<std::size_t>(doc.get_int_or("laura.parent_count", 5));
    config.laura.iterations = static_cast<std::size_t>(doc.get_int_or("laura.iterations", 10));
    config.laura.max_attempts = static_cast<std::size_t>(doc.get_int_or("laura.max_attempts", 3));
    config.laura.omega_tolerance = doc.get_double_or("laura.omega_tolerance", 1e-6);
    config.laura_generator = doc.get_string_or("laura.generator", "ox");

    config.ledma_samples = static_cast<std::size_t>(doc.get_int_or("ledma.samples", 1));
    config.ledma_generator = doc.get_string_or("ledma.generator", "ox");

    config.genetic.population_size =
        static_cast<std::size_t>(doc.get_int_or("genetic.population_size", 50));
    config.genetic.generations = static_cast<std::size_t>(doc.get_int_or("genetic.generations", 500));
    config.genetic.crossover_rate = doc.get_double_or("genetic.crossover_rate", 0.9);
    config.genetic.mutation_rate = doc.get_double_or("genetic.mutation_rate", 0.2);
    config.genetic.tournament_size =
        static_cast<std::size_t>(doc.get_int_or("genetic.tournament_size", 3));

    config.exact_cap = static_cast<int>(doc.get_int_or("exact.max_n", 18));

    config.endpoint.base_url = doc.get_string_or("llm.base_url", "");
    config.endpoint.model_name = doc.get_string_or("llm.model", "");
    config.endpoint.temperature = doc.get_double_or("llm.temperature", 0.7);
    config.endpoint.timeout_s = doc.get_double_or("llm.timeout_s", 60.0);
    config.endpoint.api_key_env_var = doc.get_string_or("llm.api_key_env_var", "LAURA_API_KEY");
    config.llm_concurrency = static_cast<int>(doc.get_int_or("llm.concurrency", 1));

    config.emit_plots = doc.get_bool_or("output.plots", false);
}

/// Suite TOML reader; missing keys fall back to the toolkit defaults.
inline SuiteConfig load_suite_config(const TomlDocument& doc) {
    SuiteConfig config;
    for (const std::int64_t n : doc.get_int_array("suite.node_counts")) {
        config.node_counts.push_back(static_cast<int>(n));
    }
    config.cases_per_count = static_cast<int>(doc.get_int_or("suite.cases_per_count", 10));
    config.runs_per_case = static_cast<int>(doc.get_int_or("suite.runs_per_case", 5));
    for (const std::string& name : doc.get_string_array("suite.algorithms")) {
        config.algorithms.push_back(algo_from_string(name));
    }
    config.base_seed = static_cast<std::uint64_t>(doc.get_int_or("suite.base_seed", 0));
    config.workers = static_cast<int>(doc.get_int_or("suite.workers", 1));

    config.radius_m = doc.get_double_or("scenario.radius_m", 3000.0);
    config.scenario.uav_altitude_m = doc.get_double_or("scenario.altitude_m", 30.0);
    config.scenario.uav_speed_mps = doc.get_double_or("scenario.speed_mps", 10.0);
    config.scenario.data_bits = doc.get_double_or("scenario.data_bits", 5e5);
    config.scenario.ref_gain_linear = doc.get_double_or("scenario.ref_gain_linear", 1e-5);
    config.scenario.radio.tx_power_w = doc.get_double_or("scenario.tx_power_w", 0.3);
    config.scenario.radio.bandwidth_hz = doc.get_double_or("scenario.bandwidth_hz", 1e6);
    config.scenario.radio.noise_power_w = doc.get_double_or("scenario.noise_power_w", 1e-14);

    apply_solver_sections(doc, config);
    return config;
}

inline SuiteConfig load_suite_file(const std::string& path) {
    return load_suite_config(load_toml_file(path));
}

} // namespace laura::bench
