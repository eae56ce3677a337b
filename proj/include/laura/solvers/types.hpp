#pragma once

#include <cstdint>
#include <vector>

#include "laura/evo/types.hpp"

namespace laura::solvers {

/// Outcome of an iterative solver run.
struct SolverRun {
    evo::Individual best;
    std::vector<double> history; ///< best omega after each generation, non-increasing under elitism
    std::uint64_t evaluations = 0;
    double wall_time_s = 0.0;
};

} // namespace laura::solvers
