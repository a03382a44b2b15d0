// Microbenchmarks for the hot paths of the simulation loop: posterior
// construction, path sampling, and a full synchronous round.

#include <benchmark/benchmark.h>

#include "dts/sim.hpp"

namespace {

using namespace dts;

struct BenchSetup {
    Objective obj;
    std::vector<Point> grid;
    PathSampler sampler;

    explicit BenchSetup(int points_per_dim)
        : obj(make_ackley()),
          grid(make_grid(obj, points_per_dim)),
          sampler(Kernel{KernelFamily::Matern52, 5.0, 1.0}, grid) {
        obj = normalized_on_grid(obj, grid);
    }
};

Dataset random_dataset(const BenchSetup& s, std::size_t n, RngStream& rng) {
    Dataset d;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = s.grid[rng.uniform_index(s.grid.size())];
        d.add(x, rng.normal());
    }
    return d;
}

void bm_posterior_build(benchmark::State& state) {
    BenchSetup s(30);
    RngStream rng(1);
    const auto data = random_dataset(s, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto gp = s.sampler.make_posterior(s.obj.noise_var, data);
        benchmark::DoNotOptimize(gp.jitter());
    }
}
BENCHMARK(bm_posterior_build)->Arg(50)->Arg(200)->Arg(500);

void bm_path_sample(benchmark::State& state) {
    BenchSetup s(static_cast<int>(state.range(0)));
    RngStream rng(2);
    const auto data = random_dataset(s, 200, rng);
    const auto gp = s.sampler.make_posterior(s.obj.noise_var, data);
    for (auto _ : state) {
        auto path = s.sampler.sample(gp, rng);
        benchmark::DoNotOptimize(path.sum());
    }
}
BENCHMARK(bm_path_sample)->Arg(20)->Arg(30)->Arg(50);

void bm_round(benchmark::State& state) {
    BenchSetup s(30);
    const int m = static_cast<int>(state.range(0));
    RngStream graph_rng(3);
    const auto g = erdos_renyi(m, 0.4, graph_rng);
    for (auto _ : state) {
        state.PauseTiming();
        auto agents = init_agents(g, s.obj, s.grid, 7);
        for (int t = 1; t <= 4; ++t) run_round(agents, g, s.obj, s.sampler, t);
        state.ResumeTiming();
        auto rec = run_round(agents, g, s.obj, s.sampler, 5);
        benchmark::DoNotOptimize(rec.queries.size());
    }
}
BENCHMARK(bm_round)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
