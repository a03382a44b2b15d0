#include "dts/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "dts/bounds.hpp"
#include "dts/info_theory.hpp"
#include "dts/plot.hpp"

namespace dts {

namespace {

constexpr std::uint64_t kGraphSalt = 0x9E3779B97F4A7C15ull;

std::string prob_label(double p) {
    std::ostringstream os;
    os << "p" << p;
    return os.str();
}

std::vector<std::string> sweep_labels(const ExperimentConfig& cfg) {
    if (cfg.graph_kind == GraphKind::ErdosRenyi) {
        std::vector<std::string> out;
        for (double p : cfg.edge_probs) out.push_back(prob_label(p));
        return out;
    }
    if (cfg.graph_kind == GraphKind::File) return {"file"};
    return {to_string(cfg.graph_kind)};
}

CommGraph build_graph(const ExperimentConfig& cfg, std::size_t label_idx, std::uint64_t seed) {
    switch (cfg.graph_kind) {
        case GraphKind::Complete: return CommGraph::complete(cfg.agents);
        case GraphKind::Empty: return CommGraph::empty(cfg.agents);
        case GraphKind::ErdosRenyi: {
            RngStream rng(seed, kGraphSalt + label_idx);
            return erdos_renyi(cfg.agents, cfg.edge_probs[label_idx], rng);
        }
        case GraphKind::File: {
            std::ifstream is(cfg.graph_file);
            if (!is) throw std::runtime_error("cannot open graph file: " + cfg.graph_file);
            std::stringstream buf;
            buf << is.rdbuf();
            CommGraph g = CommGraph::from_json(buf.str());
            if (g.m() != cfg.agents)
                throw std::runtime_error("graph file agent count does not match --agents");
            return g;
        }
    }
    throw std::logic_error("build_graph: unreachable");
}

void write_aggregate_csv(std::ostream& os, const std::vector<AggregateRow>& rows) {
    os << "t,RA_mean,RA_se,RS_mean,RS_se,cumRA_mean,cumRA_se,cumRS_mean,cumRS_se\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.t, r.ra_mean, r.ra_se, r.rs_mean, r.rs_se, r.cum_ra_mean, r.cum_ra_se,
                      r.cum_rs_mean, r.cum_rs_se);
        os << buf;
    }
}

void write_bounds_csv(const std::filesystem::path& path, const ExperimentConfig& cfg,
                      const Kernel& kernel, const CommGraph& g, const std::vector<Point>& grid) {
    const auto vmax = static_cast<int>(max_clique(g).size());
    const auto cover = greedy_clique_cover(g);
    const std::size_t psi_max =
        std::min<std::size_t>(grid.size(), static_cast<std::size_t>(cfg.rounds) *
                                               static_cast<std::size_t>(std::max(vmax, 1)));
    const auto psi = estimate_mig_table(kernel, cfg.noise_var, grid, static_cast<int>(psi_max));
    RngStream xi_rng(0, kGraphSalt ^ 0x5151u);
    const auto xi = estimate_xi_table(kernel, cfg.noise_var, grid, std::max(vmax, 1), cfg.rounds,
                                      cfg.xi_trials, xi_rng);

    BoundInputs in;
    in.m = cfg.agents;
    in.domain_size = static_cast<double>(grid.size());
    in.noise_var = cfg.noise_var;
    for (const auto& part : cover.parts) in.clique_sizes.push_back(static_cast<int>(part.size()));
    in.psi = psi;
    in.xi = xi;

    std::ofstream os(path);
    os << "t,bound_avg,bound_simple,psi_method,xi_method\n";
    char buf[160];
    for (int t = 1; t <= cfg.rounds; ++t) {
        in.t = t;
        const double ba = bound_avg_regret(in);
        const double bs = bound_simple_regret(g, in);
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,greedy_lower,sampled\n", t, ba, bs);
        os << buf;
    }
}

const char* series_color(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2"};
    return colors[i % (sizeof(colors) / sizeof(colors[0]))];
}

}  // namespace

std::vector<AggregateRow> aggregate_traces(const std::vector<RegretTrace>& traces) {
    if (traces.empty()) return {};
    const std::size_t T = traces[0].rows.size();
    const double n = static_cast<double>(traces.size());
    std::vector<AggregateRow> out(T);
    auto mean_se = [&](auto get, std::size_t t, double& mean, double& se) {
        double sum = 0.0;
        for (const auto& tr : traces) sum += get(tr.rows[t]);
        mean = sum / n;
        double ss = 0.0;
        for (const auto& tr : traces) {
            const double d = get(tr.rows[t]) - mean;
            ss += d * d;
        }
        se = n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
    };
    for (std::size_t t = 0; t < T; ++t) {
        out[t].t = traces[0].rows[t].t;
        mean_se([](const RegretRow& r) { return r.r_avg; }, t, out[t].ra_mean, out[t].ra_se);
        mean_se([](const RegretRow& r) { return r.r_simple; }, t, out[t].rs_mean, out[t].rs_se);
        mean_se([](const RegretRow& r) { return r.cum_avg; }, t, out[t].cum_ra_mean,
                out[t].cum_ra_se);
        mean_se([](const RegretRow& r) { return r.cum_simple; }, t, out[t].cum_rs_mean,
                out[t].cum_rs_se);
    }
    return out;
}

SweepResult run_sweep(const ExperimentConfig& raw, bool write_files) {
    const ExperimentConfig cfg = validate_config(raw);
    const auto labels = sweep_labels(cfg);

    const Objective base = make_objective(cfg.objective, cfg.noise_var);
    const std::vector<Point> grid = make_grid(base, cfg.grid_points_per_dim);
    const Objective obj = normalized_on_grid(base, grid);
    // Configured lengthscale is in normalized [-1,1] domain units; for
    // stationary kernels that equals a raw-coordinate lengthscale scaled by
    // the domain half-width.
    Kernel kernel = cfg.kernel();
    double half_width = 0.0;
    for (std::size_t i = 0; i < base.dim(); ++i)
        half_width = std::max(half_width, 0.5 * (base.upper[i] - base.lower[i]));
    kernel.lengthscale *= half_width;
    const PathSampler sampler(kernel, grid);

    namespace fs = std::filesystem;
    fs::path out_dir(cfg.out_dir);
    fs::path marker;
    if (write_files) {
        fs::create_directories(out_dir);
        marker = out_dir / "INCOMPLETE";
        std::ofstream(marker) << "sweep in progress\n";
        std::ofstream(out_dir / "config.json") << cfg.to_json() << '\n';
        nlohmann::json meta;
        meta["objective"] = obj.name;
        meta["rescale_offset"] = obj.offset;
        meta["rescale_scale"] = obj.scale;
        meta["f_star_normalized"] = obj.true_opt_value;
        meta["f_star_point"] = obj.true_opt_point.coords;
        meta["grid_size"] = grid.size();
        std::ofstream(out_dir / "meta.json") << meta.dump(2) << '\n';
    }

    SweepResult result;
    result.config = cfg;
    result.labels.resize(labels.size());
    for (std::size_t li = 0; li < labels.size(); ++li) {
        result.labels[li].label = labels[li];
        result.labels[li].traces.resize(cfg.seeds.size(),
                                        RegretTrace{});
    }

    struct Task {
        std::size_t label_idx;
        std::size_t seed_idx;
    };
    std::vector<Task> tasks;
    for (std::size_t li = 0; li < labels.size(); ++li)
        for (std::size_t si = 0; si < cfg.seeds.size(); ++si) tasks.push_back({li, si});

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string first_error;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task task = tasks[i];
            try {
                const std::uint64_t seed = cfg.seeds[task.seed_idx];
                const CommGraph g = build_graph(cfg, task.label_idx, seed);
                RunSpec spec{g, obj, sampler, cfg.rounds, seed};
                RegretTrace trace = run_experiment(spec);
                if (write_files) {
                    const std::string base_name = labels[task.label_idx] + "_seed" +
                                                  std::to_string(seed);
                    std::ofstream ts(out_dir / ("trace_" + base_name + ".csv"));
                    write_trace_csv(ts, trace);
                    std::ofstream qs(out_dir / ("qlog_" + base_name + ".csv"));
                    write_query_log_csv(qs, trace, obj.dim());
                }
                result.labels[task.label_idx].traces[task.seed_idx] = std::move(trace);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty()) first_error = e.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!first_error.empty()) throw std::runtime_error("sweep failed: " + first_error);

    for (std::size_t li = 0; li < labels.size(); ++li) {
        result.labels[li].aggregate = aggregate_traces(result.labels[li].traces);
        if (write_files) {
            std::ofstream os(out_dir / ("aggregate_" + labels[li] + ".csv"));
            write_aggregate_csv(os, result.labels[li].aggregate);
            if (cfg.emit_bounds) {
                const CommGraph g = build_graph(cfg, li, cfg.seeds[0]);
                write_bounds_csv(out_dir / ("bounds_" + labels[li] + ".csv"), cfg, kernel, g, grid);
            }
        }
    }

    if (write_files) {
        struct Panel {
            const char* file;
            const char* title;
            double AggregateRow::*field;
        };
        const Panel panels[] = {
            {"plot_RA.svg", "Instant average regret", &AggregateRow::ra_mean},
            {"plot_cumRA.svg", "Cumulative average regret", &AggregateRow::cum_ra_mean},
            {"plot_RS.svg", "Instant simple regret", &AggregateRow::rs_mean},
            {"plot_cumRS.svg", "Cumulative simple regret", &AggregateRow::cum_rs_mean},
        };
        for (const auto& panel : panels) {
            std::vector<PlotSeries> series;
            for (std::size_t li = 0; li < result.labels.size(); ++li) {
                PlotSeries s;
                s.label = result.labels[li].label;
                s.color = series_color(li);
                for (const auto& row : result.labels[li].aggregate) {
                    s.x.push_back(row.t);
                    s.y.push_back(row.*(panel.field));
                }
                series.push_back(std::move(s));
            }
            write_svg_line_chart((out_dir / panel.file).string(),
                                 std::string(panel.title) + " (" + cfg.objective + ")", "t",
                                 "regret", series);
        }
        std::filesystem::remove(marker);
    }
    return result;
}

}  // namespace dts
