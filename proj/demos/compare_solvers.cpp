// Generates a small scenario, runs every offline solver on it, and writes
// an SVG of the best route. A compact tour of the library surface.

#include <cstdio>

#include "laura/laura.hpp"

int main() {
    const laura::wsn::Scenario scenario = laura::wsn::generate_scenario(8, 3000.0, 42);

    const laura::evo::Individual exact = laura::solvers::solve_exact(scenario);
    const laura::evo::Individual greedy = laura::solvers::solve_greedy(scenario);

    laura::util::Rng rng(42);
    const laura::evo::Individual random_pick = laura::solvers::solve_random(scenario, rng);

    laura::solvers::GeneticConfig genetic_config;
    genetic_config.generations = 200;
    genetic_config.seed = 42;
    const laura::solvers::SolverRun genetic = laura::solvers::solve_genetic(scenario, genetic_config);

    laura::engine::LauraConfig laura_config;
    laura_config.iterations = 200;
    laura_config.seed = 42;
    laura::llm::OxMock mock(42);
    const laura::engine::SolverReport report =
        laura::engine::run_laura(scenario, laura_config, mock);

    std::printf("%-22s %12s\n", "solver", "max AoI [s]");
    std::printf("%-22s %12.3f\n", "exact (Held-Karp)", exact.omega);
    std::printf("%-22s %12.3f\n", "greedy", greedy.omega);
    std::printf("%-22s %12.3f\n", "random", random_pick.omega);
    std::printf("%-22s %12.3f\n", "genetic", genetic.best.omega);
    std::printf("%-22s %12.3f  (OX mock, eps %.2f)\n", "evolutionary loop",
                report.best->omega, report.hallucination_rate);

    std::printf("\nbest route %s\n", laura::llm::render_route(report.best->route).c_str());
    laura::bench::plot_route(scenario, report.best->route, "route.svg");
    std::printf("wrote route.svg\n");
    return 0;
}
