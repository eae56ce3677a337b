#pragma once

/// Umbrella header for the whole library: UAV/WSN model, evolutionary
/// core, baseline and exact solvers, the LLM-assisted engine, and the
/// benchmark harness.

#include "laura/util/format.hpp"
#include "laura/util/rng.hpp"

#include "laura/wsn/generate.hpp"
#include "laura/wsn/model.hpp"
#include "laura/wsn/scenario_io.hpp"

#include "laura/evo/population.hpp"
#include "laura/evo/types.hpp"
#include "laura/evo/verify.hpp"

#include "laura/solvers/crossover.hpp"
#include "laura/solvers/exact.hpp"
#include "laura/solvers/genetic.hpp"
#include "laura/solvers/greedy.hpp"
#include "laura/solvers/random.hpp"
#include "laura/solvers/types.hpp"

#include "laura/engine/laura.hpp"
#include "laura/engine/port.hpp"
#include "laura/engine/report_io.hpp"

#include "laura/llm/client.hpp"
#include "laura/llm/generator.hpp"
#include "laura/llm/mocks.hpp"
#include "laura/llm/parse.hpp"
#include "laura/llm/prompt.hpp"

#include "laura/bench/plot.hpp"
#include "laura/bench/stats.hpp"
#include "laura/bench/suite.hpp"
#include "laura/bench/toml.hpp"
