#pragma once

#include <string>
#include <vector>

#include "dts/config.hpp"
#include "dts/sim.hpp"

namespace dts {

struct AggregateRow {
    int t = 0;
    double ra_mean = 0, ra_se = 0;
    double rs_mean = 0, rs_se = 0;
    double cum_ra_mean = 0, cum_ra_se = 0;
    double cum_rs_mean = 0, cum_rs_se = 0;
};

// Mean and standard error over seeds, per round.
std::vector<AggregateRow> aggregate_traces(const std::vector<RegretTrace>& traces);

struct LabelResult {
    std::string label;  // "p0.2", "complete", ...
    std::vector<RegretTrace> traces;  // one per seed, config order
    std::vector<AggregateRow> aggregate;
};

struct SweepResult {
    ExperimentConfig config;
    std::vector<LabelResult> labels;
};

// Runs every (graph label, seed) combination of the config, in parallel up to
// config.jobs. When out_dir is non-empty, writes the config sidecar, per-run
// trace and query-log CSVs, per-label aggregate CSVs, optional bound overlay
// CSVs, and the four regret plots.
SweepResult run_sweep(const ExperimentConfig& config, bool write_files = true);

}  // namespace dts
