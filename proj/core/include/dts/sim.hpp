#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "dts/gp.hpp"
#include "dts/graph.hpp"
#include "dts/objectives.hpp"
#include "dts/rng.hpp"

namespace dts {

// One agent's view: its dataset D_{t,i} (own queries plus neighbor
// broadcasts, in arrival order) and a private RNG stream.
struct AgentState {
    int id = 0;
    Dataset dataset;
    RngStream rng{0};
};

struct QueryRecord {
    int round = 0;  // 0 = initialization
    int agent = 0;
    Point x;
    double y = 0.0;            // noisy observation the agent sees
    double f_noiseless = 0.0;  // used for regret, never shown to agents
};

// One synchronous round: every agent's query, chosen before any round-t
// broadcast is delivered.
struct RoundRecord {
    int t = 0;
    std::vector<QueryRecord> queries;  // one per agent, ordered by agent id
};

struct RegretRow {
    int t = 0;
    double r_avg = 0.0;
    double r_simple = 0.0;
    double cum_avg = 0.0;
    double cum_simple = 0.0;
};

struct RegretTrace {
    std::uint64_t seed = 0;
    std::vector<RegretRow> rows;
    std::vector<QueryRecord> query_log;  // includes round-0 initialization
};

// One point per agent, drawn uniformly from the grid on the agent's own
// stream, evaluated noisily, and broadcast to neighbors.
std::vector<AgentState> init_agents(const CommGraph& graph, const Objective& obj,
                                    const std::vector<Point>& grid, std::uint64_t master_seed);

// One round of the distributed Thompson sampling loop. Two-phase: all agents
// pick and evaluate their queries from data through round t-1, then all
// broadcasts are exchanged at once.
RoundRecord run_round(std::vector<AgentState>& agents, const CommGraph& graph,
                      const Objective& obj, const PathSampler& sampler, int t);

struct RunSpec {
    const CommGraph& graph;
    const Objective& obj;
    const PathSampler& sampler;
    int rounds = 50;
    std::uint64_t seed = 0;
};

using RoundCallback = std::function<void(const std::vector<AgentState>&, const RoundRecord&)>;

// Full experiment: init, `rounds` rounds, regret accumulation. f* is the
// noiseless grid maximum. The optional callback observes post-broadcast state
// each round (used by consistency checks).
RegretTrace run_experiment(const RunSpec& spec, const RoundCallback& on_round = nullptr);

void write_trace_csv(std::ostream& os, const RegretTrace& trace);
void write_query_log_csv(std::ostream& os, const RegretTrace& trace, std::size_t dim);

}  // namespace dts
