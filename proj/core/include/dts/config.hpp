#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dts/kernel.hpp"

namespace dts {

enum class GraphKind { Complete, Empty, ErdosRenyi, File };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& s);

// Fully-resolved experiment description. Serialized as the JSON sidecar next
// to every sweep's outputs; re-running from the sidecar reproduces the run.
struct ExperimentConfig {
    std::string objective = "ackley";
    int agents = 20;
    GraphKind graph_kind = GraphKind::Complete;
    std::vector<double> edge_probs;  // one run family per probability (ErdosRenyi)
    std::string graph_file;          // GraphKind::File
    int rounds = 50;
    std::string kernel_family = "matern52";
    double lengthscale = 1.0;
    double output_scale = 1.0;
    double noise_var = 0.01;
    int grid_points_per_dim = 50;
    std::vector<std::uint64_t> seeds = {0};
    std::string out_dir = "runs";
    bool emit_bounds = false;
    int jobs = 1;
    int xi_trials = 200;

    Kernel kernel() const;
    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);

    bool operator==(const ExperimentConfig&) const = default;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what, std::vector<std::string> problems)
        : std::runtime_error(what), problems(std::move(problems)) {}
    std::vector<std::string> problems;
};

// Checks every constraint and throws ConfigError naming each violation;
// returns the config (with nothing left implicit) otherwise.
ExperimentConfig validate_config(const ExperimentConfig& raw);

}  // namespace dts
