#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "laura/laura.hpp"

namespace {

laura::bench::SuiteConfig solver_settings(const std::string& config_path) {
    laura::bench::SuiteConfig settings;
    if (!config_path.empty()) {
        laura::bench::apply_solver_sections(laura::bench::load_toml_file(config_path), settings);
    }
    return settings;
}

nlohmann::json profile_to_json(const laura::wsn::AoiProfile& profile) {
    return {{"per_node_aoi", profile.per_node_aoi},
            {"max_aoi", profile.max_aoi},
            {"mission_time", profile.mission_time},
            {"tau_sum", profile.tau_sum},
            {"travel_objective", profile.travel_objective}};
}

int run_generate(int n, double radius, std::uint64_t seed, const std::string& out) {
    const laura::wsn::Scenario scenario = laura::wsn::generate_scenario(n, radius, seed);
    laura::wsn::save_scenario_file(scenario, out);
    std::printf("wrote %s: %d nodes in a %.0f m disk, seed %llu\n", out.c_str(), n, radius,
                static_cast<unsigned long long>(seed));
    return 0;
}

int run_solve(const std::string& scenario_path, const std::string& algo_name,
              const std::string& config_path, std::uint64_t seed, const std::string& out,
              const std::string& plot_path, const std::string& trace_path) {
    const laura::wsn::Scenario scenario = laura::wsn::load_scenario_file(scenario_path);
    const laura::bench::Algo algo = laura::bench::algo_from_string(algo_name);
    laura::bench::SuiteConfig settings = solver_settings(config_path);

    nlohmann::json doc;
    doc["algorithm"] = algo_name;
    doc["scenario"] = scenario_path;
    doc["seed"] = seed;

    std::optional<laura::evo::Individual> best;
    const auto started = std::chrono::steady_clock::now();
    switch (algo) {
    case laura::bench::Algo::Greedy:
        best = laura::solvers::solve_greedy(scenario);
        break;
    case laura::bench::Algo::Random: {
        laura::util::Rng rng(seed);
        best = laura::solvers::solve_random(scenario, rng);
        break;
    }
    case laura::bench::Algo::Exact:
        best = laura::solvers::solve_exact(scenario, {settings.exact_cap, settings.exact_cap});
        break;
    case laura::bench::Algo::Genetic: {
        laura::solvers::GeneticConfig config = settings.genetic;
        config.seed = seed;
        const laura::solvers::SolverRun run = laura::solvers::solve_genetic(scenario, config);
        best = run.best;
        doc["history"] = run.history;
        doc["evaluations"] = run.evaluations;
        break;
    }
    case laura::bench::Algo::Laura: {
        laura::engine::LauraConfig config = settings.laura;
        config.seed = seed;
        auto generator = laura::bench::suite_detail::make_run_generator(
            settings.laura_generator, settings.endpoint, seed);
        const laura::engine::SolverReport report =
            laura::engine::run_laura(scenario, config, *generator);
        best = report.best;
        doc["engine"] = laura::engine::report_to_json(report);
        if (!trace_path.empty()) {
            laura::engine::save_trace_file(trace_path, report,
                                           laura::engine::TraceScheme::Evolution);
        }
        break;
    }
    case laura::bench::Algo::Ledma: {
        auto generator = laura::bench::suite_detail::make_run_generator(
            settings.ledma_generator, settings.endpoint, seed);
        const laura::engine::SolverReport report =
            laura::engine::run_ledma(scenario, settings.ledma_samples, *generator);
        best = report.best;
        doc["engine"] = laura::engine::report_to_json(report);
        if (!trace_path.empty()) {
            laura::engine::save_trace_file(trace_path, report,
                                           laura::engine::TraceScheme::DirectSampling);
        }
        break;
    }
    }
    doc["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (best.has_value()) {
        doc["best"] = laura::engine::individual_to_json(*best);
        doc["profile"] = profile_to_json(laura::wsn::evaluate_route(scenario, best->route));
        std::printf("%s: omega %.6f s, route %s\n", algo_name.c_str(), best->omega,
                    laura::llm::render_route(best->route).c_str());
        if (!plot_path.empty()) {
            laura::bench::plot_route(scenario, best->route, plot_path);
            std::printf("wrote %s\n", plot_path.c_str());
        }
    } else {
        doc["best"] = nullptr;
        std::fprintf(stderr, "%s: no valid solution found\n", algo_name.c_str());
    }

    if (!out.empty()) {
        laura::engine::save_text_file(out, doc.dump(2) + "\n");
        std::printf("wrote %s\n", out.c_str());
    }
    return best.has_value() ? 0 : 1;
}

int run_bench(const std::string& suite_path, const std::string& out_dir) {
    const laura::bench::SuiteConfig config = laura::bench::load_suite_file(suite_path);
    const laura::bench::ExperimentSummary summary = laura::bench::run_experiment(config);
    laura::bench::write_experiment_artifacts(out_dir, config, summary);

    std::printf("%-10s %4s %14s %14s %10s %6s %7s\n", "algorithm", "n", "mean_omega",
                "var_omega", "mean_eps", "runs", "failed");
    for (const laura::bench::GroupSummary& group : summary.groups) {
        if (group.runs == group.failed_runs) {
            std::printf("%-10s %4d %14s %14s %10s %6zu %7zu\n",
                        laura::bench::to_string(group.algorithm), group.n, "-", "-", "-",
                        group.runs, group.failed_runs);
        } else {
            std::printf("%-10s %4d %14.4f %14.4f %10.4f %6zu %7zu\n",
                        laura::bench::to_string(group.algorithm), group.n, group.mean_omega,
                        group.variance_omega, group.mean_epsilon, group.runs, group.failed_runs);
        }
    }
    std::printf("wrote %s/records.csv and %s/summary.json\n", out_dir.c_str(), out_dir.c_str());
    return 0;
}

int run_verify(const std::string& scenario_path, const std::string& route_text) {
    const laura::wsn::Scenario scenario = laura::wsn::load_scenario_file(scenario_path);
    const laura::llm::ParseResult parsed =
        laura::llm::parse_route_response(route_text, scenario.node_count());

    laura::evo::VerifyResult result;
    if (const auto* candidate = std::get_if<laura::evo::CandidateIndividual>(&parsed)) {
        result = laura::evo::verify(scenario, *candidate);
    } else {
        result = std::get<laura::evo::VerificationError>(parsed);
    }

    if (const auto* individual = std::get_if<laura::evo::Individual>(&result)) {
        const laura::wsn::AoiProfile profile =
            laura::wsn::evaluate_route(scenario, individual->route);
        std::printf("VALID %s\n", laura::llm::render_route(individual->route).c_str());
        std::printf("  max AoI          %.6f s\n", profile.max_aoi);
        std::printf("  mission time     %.6f s\n", profile.mission_time);
        std::printf("  travel objective %.6f s\n", profile.travel_objective);
        std::printf("  upload total     %.6f s\n", profile.tau_sum);
        return 0;
    }
    const auto& error = std::get<laura::evo::VerificationError>(result);
    std::printf("INVALID (%s): %s\n", std::string(laura::evo::to_string(error.kind)).c_str(),
                error.detail.c_str());
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV max-AoI route optimization: scenario tools, solvers, and benchmarks"};
    app.require_subcommand(1);

    int gen_n = 20;
    double gen_radius = 3000.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "scenario.json";
    CLI::App* generate = app.add_subcommand("generate", "Generate a random scenario");
    generate->add_option("--n", gen_n, "Number of sensor nodes")->required();
    generate->add_option("--radius", gen_radius, "Disk radius in meters");
    generate->add_option("--seed", gen_seed, "Random seed");
    generate->add_option("--out", gen_out, "Output scenario JSON path")->required();

    std::string solve_scenario;
    std::string solve_algo;
    std::string solve_config;
    std::uint64_t solve_seed = 0;
    std::string solve_out;
    std::string solve_plot;
    std::string solve_trace;
    CLI::App* solve = app.add_subcommand("solve", "Solve one scenario with one algorithm");
    solve->add_option("--scenario", solve_scenario, "Scenario JSON path")->required();
    solve->add_option("--algo", solve_algo, "laura|ledma|genetic|greedy|random|exact")->required();
    solve->add_option("--config", solve_config, "Solver config TOML");
    solve->add_option("--seed", solve_seed, "Run seed");
    solve->add_option("--out", solve_out, "Report JSON path");
    solve->add_option("--plot", solve_plot, "Route SVG path");
    solve->add_option("--trace", solve_trace, "Per-attempt trace CSV path (laura/ledma)");

    std::string bench_suite;
    std::string bench_out = "bench-out";
    CLI::App* bench = app.add_subcommand("bench", "Run an experiment suite");
    bench->add_option("--suite", bench_suite, "Suite TOML path")->required();
    bench->add_option("--out", bench_out, "Output directory")->required();

    std::string verify_scenario;
    std::string verify_route;
    CLI::App* verify = app.add_subcommand("verify", "Check a route against a scenario");
    verify->add_option("--scenario", verify_scenario, "Scenario JSON path")->required();
    verify->add_option("--route", verify_route, "Route, e.g. \"[0, 2, 1, 0]\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return run_generate(gen_n, gen_radius, gen_seed, gen_out);
        if (solve->parsed()) {
            return run_solve(solve_scenario, solve_algo, solve_config, solve_seed, solve_out,
                             solve_plot, solve_trace);
        }
        if (bench->parsed()) return run_bench(bench_suite, bench_out);
        if (verify->parsed()) return run_verify(verify_scenario, verify_route);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
