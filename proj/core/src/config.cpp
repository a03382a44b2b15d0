#include "dts/config.hpp"

#include <filesystem>

#include <nlohmann/json.hpp>

namespace dts {

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Complete: return "complete";
        case GraphKind::Empty: return "empty";
        case GraphKind::ErdosRenyi: return "erdos_renyi";
        case GraphKind::File: return "file";
    }
    return "?";
}

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "complete") return GraphKind::Complete;
    if (s == "empty") return GraphKind::Empty;
    if (s == "erdos_renyi") return GraphKind::ErdosRenyi;
    if (s == "file") return GraphKind::File;
    throw std::invalid_argument("unknown graph kind: " + s);
}

Kernel ExperimentConfig::kernel() const {
    return Kernel{kernel_family_from_string(kernel_family), lengthscale, output_scale};
}

std::string ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["objective"] = objective;
    j["agents"] = agents;
    j["graph"] = to_string(graph_kind);
    j["edge_probs"] = edge_probs;
    j["graph_file"] = graph_file;
    j["rounds"] = rounds;
    j["kernel"] = kernel_family;
    j["lengthscale"] = lengthscale;
    j["output_scale"] = output_scale;
    j["noise_var"] = noise_var;
    j["grid_points_per_dim"] = grid_points_per_dim;
    j["seeds"] = seeds;
    j["out_dir"] = out_dir;
    j["bounds"] = emit_bounds;
    j["jobs"] = jobs;
    j["xi_trials"] = xi_trials;
    return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentConfig c;
    c.objective = j.at("objective").get<std::string>();
    c.agents = j.at("agents").get<int>();
    c.graph_kind = graph_kind_from_string(j.at("graph").get<std::string>());
    c.edge_probs = j.at("edge_probs").get<std::vector<double>>();
    c.graph_file = j.at("graph_file").get<std::string>();
    c.rounds = j.at("rounds").get<int>();
    c.kernel_family = j.at("kernel").get<std::string>();
    c.lengthscale = j.at("lengthscale").get<double>();
    c.output_scale = j.at("output_scale").get<double>();
    c.noise_var = j.at("noise_var").get<double>();
    c.grid_points_per_dim = j.at("grid_points_per_dim").get<int>();
    c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    c.out_dir = j.at("out_dir").get<std::string>();
    c.emit_bounds = j.at("bounds").get<bool>();
    c.jobs = j.at("jobs").get<int>();
    c.xi_trials = j.at("xi_trials").get<int>();
    return c;
}

ExperimentConfig validate_config(const ExperimentConfig& raw) {
    std::vector<std::string> problems;
    if (raw.objective != "ackley" && raw.objective != "rosenbrock")
        problems.push_back("--objective: must be 'ackley' or 'rosenbrock', got '" + raw.objective + "'");
    if (raw.agents < 1) problems.push_back("--agents: must be >= 1");
    if (raw.rounds < 1) problems.push_back("--rounds: must be >= 1");
    if (raw.seeds.empty()) problems.push_back("--seeds: at least one seed required");
    if (raw.noise_var <= 0.0) problems.push_back("--noise-var: must be > 0");
    if (raw.grid_points_per_dim < 2) problems.push_back("--grid: points per dimension must be >= 2");
    if (raw.lengthscale <= 0.0) problems.push_back("kernel lengthscale must be > 0");
    if (raw.output_scale <= 0.0) problems.push_back("kernel output_scale must be > 0");
    if (raw.jobs < 1) problems.push_back("--jobs: must be >= 1");
    if (raw.xi_trials < 1) problems.push_back("xi_trials must be >= 1");
    try {
        kernel_family_from_string(raw.kernel_family);
    } catch (const std::exception& e) {
        problems.push_back(std::string("--kernel: ") + e.what());
    }
    if (raw.graph_kind == GraphKind::ErdosRenyi) {
        if (raw.edge_probs.empty())
            problems.push_back("--edge-prob: at least one probability required for erdos_renyi");
        for (double p : raw.edge_probs)
            if (p < 0.0 || p > 1.0)
                problems.push_back("--edge-prob: " + std::to_string(p) + " outside [0,1]");
    }
    if (raw.graph_kind == GraphKind::File) {
        if (raw.graph_file.empty())
            problems.push_back("--graph-file: path required for graph kind 'file'");
        else if (!std::filesystem::exists(raw.graph_file))
            problems.push_back("--graph-file: file does not exist: " + raw.graph_file);
    }
    if (!problems.empty()) {
        std::string what = "invalid configuration:";
        for (const auto& p : problems) what += "\n  " + p;
        throw ConfigError(what, std::move(problems));
    }
    return raw;
}

}  // namespace dts
