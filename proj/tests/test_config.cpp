#include <doctest.h>

#include <algorithm>
#include <string>

#include "dts/config.hpp"

using namespace dts;

namespace {

bool mentions(const ConfigError& e, const std::string& needle) {
    return std::any_of(e.problems.begin(), e.problems.end(), [&](const std::string& p) {
        return p.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_SUITE_BEGIN("config");

TEST_CASE("defaults validate cleanly") {
    ExperimentConfig c;
    CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("each violation is reported and names the offending flag") {
    ExperimentConfig c;

    SUBCASE("objective") {
        c.objective = "branin";
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--objective"), ConfigError);
    }
    SUBCASE("agents") {
        c.agents = 0;
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--agents"), ConfigError);
    }
    SUBCASE("rounds") {
        c.rounds = -3;
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--rounds"), ConfigError);
    }
    SUBCASE("seeds") {
        c.seeds.clear();
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--seeds"), ConfigError);
    }
    SUBCASE("noise") {
        c.noise_var = 0.0;
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--noise-var"), ConfigError);
    }
    SUBCASE("grid") {
        c.grid_points_per_dim = 1;
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--grid"), ConfigError);
    }
    SUBCASE("kernel") {
        c.kernel_family = "periodic";
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--kernel"), ConfigError);
    }
    SUBCASE("edge-prob out of range") {
        c.graph_kind = GraphKind::ErdosRenyi;
        c.edge_probs = {0.2, 1.3};
        try {
            validate_config(c);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(mentions(e, "--edge-prob"));
            CHECK(mentions(e, "outside [0,1]"));
        }
    }
    SUBCASE("edge-prob missing") {
        c.graph_kind = GraphKind::ErdosRenyi;
        c.edge_probs.clear();
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--edge-prob"), ConfigError);
    }
    SUBCASE("graph file missing") {
        c.graph_kind = GraphKind::File;
        c.graph_file = "/nonexistent/graph.json";
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--graph-file"), ConfigError);
    }
    SUBCASE("jobs") {
        c.jobs = 0;
        CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("--jobs"), ConfigError);
    }
}

TEST_CASE("multiple violations are all collected") {
    ExperimentConfig c;
    c.agents = -1;
    c.rounds = 0;
    c.noise_var = -0.5;
    try {
        validate_config(c);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.problems.size() == 3);
        CHECK(mentions(e, "--agents"));
        CHECK(mentions(e, "--rounds"));
        CHECK(mentions(e, "--noise-var"));
    }
}

TEST_CASE("json round trip preserves every field") {
    ExperimentConfig c;
    c.objective = "rosenbrock";
    c.agents = 12;
    c.graph_kind = GraphKind::ErdosRenyi;
    c.edge_probs = {0.2, 0.4, 0.6};
    c.rounds = 35;
    c.kernel_family = "se";
    c.lengthscale = 0.7;
    c.output_scale = 1.5;
    c.noise_var = 0.02;
    c.grid_points_per_dim = 40;
    c.seeds = {3, 5, 8};
    c.out_dir = "out/exp1";
    c.emit_bounds = true;
    c.jobs = 2;
    c.xi_trials = 77;
    const auto round_tripped = ExperimentConfig::from_json(c.to_json());
    CHECK(round_tripped == c);
}

TEST_CASE("graph kind string mapping") {
    for (auto kind : {GraphKind::Complete, GraphKind::Empty, GraphKind::ErdosRenyi, GraphKind::File})
        CHECK(graph_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(graph_kind_from_string("ring"), std::invalid_argument);
}

TEST_SUITE_END();
