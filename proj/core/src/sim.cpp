#include "dts/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dts {

namespace {

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<AgentState> init_agents(const CommGraph& graph, const Objective& obj,
                                    const std::vector<Point>& grid, std::uint64_t master_seed) {
    if (grid.empty()) throw std::invalid_argument("init_agents: empty grid");
    const int m = graph.m();
    std::vector<AgentState> agents;
    agents.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        AgentState a;
        a.id = i;
        a.rng = RngStream::split(master_seed, static_cast<std::uint64_t>(i) + 1);
        agents.push_back(std::move(a));
    }
    // Phase 1: every agent draws and evaluates its own initial point.
    std::vector<QueryRecord> init(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto& a = agents[static_cast<std::size_t>(i)];
        const std::size_t idx = a.rng.uniform_index(grid.size());
        QueryRecord q;
        q.round = 0;
        q.agent = i;
        q.x = grid[idx];
        q.f_noiseless = eval_noiseless(obj, q.x);
        q.y = q.f_noiseless + a.rng.normal(0.0, std::sqrt(obj.noise_var));
        init[static_cast<std::size_t>(i)] = std::move(q);
    }
    // Phase 2: own point first, then neighbor broadcasts in ascending id order.
    for (int i = 0; i < m; ++i) {
        auto& a = agents[static_cast<std::size_t>(i)];
        a.dataset.add(init[static_cast<std::size_t>(i)].x, init[static_cast<std::size_t>(i)].y);
        for (int j : graph.neighbors(i))
            a.dataset.add(init[static_cast<std::size_t>(j)].x, init[static_cast<std::size_t>(j)].y);
    }
    return agents;
}

RoundRecord run_round(std::vector<AgentState>& agents, const CommGraph& graph,
                      const Objective& obj, const PathSampler& sampler, int t) {
    if (t < 1) throw std::invalid_argument("run_round: t must be >= 1");
    RoundRecord rec;
    rec.t = t;
    rec.queries.resize(agents.size());
    // Query phase: posteriors are built only from data through round t-1.
    for (auto& a : agents) {
        GpPosterior gp = sampler.make_posterior(obj.noise_var, a.dataset);
        const Eigen::VectorXd path = sampler.sample(gp, a.rng);
        const std::size_t idx = argmax_index(path);
        QueryRecord q;
        q.round = t;
        q.agent = a.id;
        q.x = sampler.grid()[idx];
        q.f_noiseless = eval_noiseless(obj, q.x);
        q.y = q.f_noiseless + a.rng.normal(0.0, std::sqrt(obj.noise_var));
        rec.queries[static_cast<std::size_t>(a.id)] = std::move(q);
    }
    // Broadcast phase: everyone extends with own query plus neighbor queries.
    for (auto& a : agents) {
        const auto& own = rec.queries[static_cast<std::size_t>(a.id)];
        a.dataset.add(own.x, own.y);
        for (int j : graph.neighbors(a.id)) {
            const auto& q = rec.queries[static_cast<std::size_t>(j)];
            a.dataset.add(q.x, q.y);
        }
    }
    return rec;
}

RegretTrace run_experiment(const RunSpec& spec, const RoundCallback& on_round) {
    const auto& grid = spec.sampler.grid();
    double f_star = -HUGE_VAL;
    for (const auto& p : grid) f_star = std::max(f_star, eval_noiseless(spec.obj, p));

    RegretTrace trace;
    trace.seed = spec.seed;
    auto agents = init_agents(spec.graph, spec.obj, grid, spec.seed);
    for (const auto& a : agents) {
        // Initialization points appear in the log as round 0; they are not
        // part of the regret metrics, which range over rounds 1..t.
        trace.query_log.push_back(QueryRecord{0, a.id, a.dataset.points[0],
                                              a.dataset.observations[0],
                                              eval_noiseless(spec.obj, a.dataset.points[0])});
    }

    const int m = spec.graph.m();
    double best_f = -HUGE_VAL;
    double cum_avg = 0.0, cum_simple = 0.0;
    for (int t = 1; t <= spec.rounds; ++t) {
        RoundRecord rec = run_round(agents, spec.graph, spec.obj, spec.sampler, t);
        double sum_gap = 0.0;
        for (const auto& q : rec.queries) {
            sum_gap += f_star - q.f_noiseless;
            best_f = std::max(best_f, q.f_noiseless);
            trace.query_log.push_back(q);
        }
        RegretRow row;
        row.t = t;
        row.r_avg = sum_gap / m;
        row.r_simple = f_star - best_f;
        cum_avg += row.r_avg;
        cum_simple += row.r_simple;
        row.cum_avg = cum_avg;
        row.cum_simple = cum_simple;
        trace.rows.push_back(row);
        if (on_round) on_round(agents, rec);
    }
    return trace;
}

void write_trace_csv(std::ostream& os, const RegretTrace& trace) {
    os << "seed,t,R_A,R_S,cumRA,cumRS\n";
    for (const auto& r : trace.rows) {
        os << trace.seed << ',' << r.t << ',' << fmt_g17(r.r_avg) << ',' << fmt_g17(r.r_simple)
           << ',' << fmt_g17(r.cum_avg) << ',' << fmt_g17(r.cum_simple) << '\n';
    }
}

void write_query_log_csv(std::ostream& os, const RegretTrace& trace, std::size_t dim) {
    os << "seed,t,agent";
    for (std::size_t i = 1; i <= dim; ++i) os << ",x" << i;
    os << ",y,f_noiseless\n";
    for (const auto& q : trace.query_log) {
        os << trace.seed << ',' << q.round << ',' << q.agent;
        for (std::size_t i = 0; i < dim; ++i) os << ',' << fmt_g17(q.x[i]);
        os << ',' << fmt_g17(q.y) << ',' << fmt_g17(q.f_noiseless) << '\n';
    }
}

}  // namespace dts
