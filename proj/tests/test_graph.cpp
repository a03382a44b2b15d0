#include <doctest.h>

#include <algorithm>
#include <bit>
#include <vector>

#include "dts/graph.hpp"

using namespace dts;

namespace {

// Exhaustive clique cover number via subset DP on the complement coloring.
int exact_theta(const CommGraph& g) {
    const int m = g.m();
    const unsigned full = (1u << m) - 1;
    std::vector<bool> clique(full + 1, false);
    for (unsigned s = 0; s <= full; ++s) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(s & (1u << i))) continue;
            for (int j = i + 1; j < m && ok; ++j)
                if ((s & (1u << j)) && !g.has_edge(i, j)) ok = false;
        }
        clique[s] = ok;
    }
    std::vector<int> best(full + 1, m + 1);
    best[0] = 0;
    for (unsigned s = 1; s <= full; ++s) {
        const int low = std::countr_zero(s);
        // Iterate subsets of s containing the lowest vertex.
        const unsigned rest = s & ~(1u << low);
        for (unsigned sub = rest;; sub = (sub - 1) & rest) {
            const unsigned part = sub | (1u << low);
            if (clique[part]) best[s] = std::min(best[s], 1 + best[s & ~part]);
            if (sub == 0) break;
        }
    }
    return best[full];
}

int exact_max_clique_size(const CommGraph& g) {
    const int m = g.m();
    int best = 0;
    for (unsigned s = 1; s < (1u << m); ++s) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(s & (1u << i))) continue;
            for (int j = i + 1; j < m && ok; ++j)
                if ((s & (1u << j)) && !g.has_edge(i, j)) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

CommGraph graph_from_mask(int m, unsigned mask) {
    CommGraph g(m);
    int bit = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++bit)
            if (mask & (1u << bit)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("erdos_renyi extremes") {
    RngStream rng(1);
    auto complete = erdos_renyi(6, 1.0, rng);
    CHECK(complete.edge_count() == 15);
    auto empty = erdos_renyi(6, 0.0, rng);
    CHECK(empty.edge_count() == 0);
    CHECK_THROWS_AS(erdos_renyi(6, 1.5, rng), std::invalid_argument);
}

TEST_CASE("erdos_renyi edge count matches the binomial mean") {
    RngStream rng(77);
    double total = 0.0;
    for (int i = 0; i < 1000; ++i) total += static_cast<double>(erdos_renyi(20, 0.4, rng).edge_count());
    const double mean = total / 1000.0;
    CHECK(mean > 72.0);
    CHECK(mean < 80.0);
}

TEST_CASE("erdos_renyi deterministic given rng") {
    RngStream r1(9), r2(9);
    CHECK(erdos_renyi(12, 0.3, r1).edges() == erdos_renyi(12, 0.3, r2).edges());
}

TEST_CASE("neighbors") {
    auto complete = CommGraph::complete(5);
    CHECK(complete.neighbors(2) == std::set<int>{0, 1, 3, 4});
    CommGraph empty(5);
    CHECK(empty.neighbors(0).empty());
    CommGraph path(3, {{0, 1}, {1, 2}});
    CHECK(path.neighbors(1) == std::set<int>{0, 2});
    CHECK_THROWS_AS(path.neighbors(3), std::out_of_range);
}

TEST_CASE("greedy clique cover basic shapes") {
    auto cover1 = greedy_clique_cover(CommGraph::complete(7));
    CHECK(cover1.parts.size() == 1);
    CHECK(cover1.parts[0].size() == 7);

    auto cover2 = greedy_clique_cover(CommGraph(4));
    CHECK(cover2.parts.size() == 4);

    CommGraph triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    auto cover3 = greedy_clique_cover(triangles);
    CHECK(cover3.parts.size() == 2);
    CHECK(cover3.parts[0].size() == 3);
    CHECK(cover3.parts[1].size() == 3);
    CHECK(exact_theta(triangles) == 2);
}

TEST_CASE("greedy cover is always a valid cover, never below exact theta (m <= 5 full enumeration)") {
    for (int m = 1; m <= 5; ++m) {
        const int bits = m * (m - 1) / 2;
        for (unsigned mask = 0; mask < (1u << bits); ++mask) {
            CommGraph g = graph_from_mask(m, mask);
            auto cover = greedy_clique_cover(g);
            REQUIRE(is_valid_cover(g, cover));
            REQUIRE(static_cast<int>(cover.parts.size()) >= exact_theta(g));
        }
    }
}

TEST_CASE("greedy cover vs exact theta on random graphs, m = 6..7") {
    RngStream rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 6 + static_cast<int>(rng.uniform_index(2));
        auto g = erdos_renyi(m, 0.2 + 0.6 * rng.uniform(), rng);
        auto cover = greedy_clique_cover(g);
        CHECK(is_valid_cover(g, cover));
        CHECK(static_cast<int>(cover.parts.size()) >= exact_theta(g));
    }
}

TEST_CASE("max clique basic shapes") {
    CHECK(max_clique(CommGraph::complete(9)).size() == 9);

    CommGraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(max_clique(star).size() == 2);

    CommGraph cycle5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(max_clique(cycle5).size() == 2);
    CHECK(exact_max_clique_size(cycle5) == 2);
}

TEST_CASE("max clique matches exhaustive enumeration for m <= 10") {
    RngStream rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + static_cast<int>(rng.uniform_index(9));
        auto g = erdos_renyi(m, rng.uniform(), rng);
        auto clique = max_clique(g);
        CHECK(is_clique(g, clique));
        CHECK(static_cast<int>(clique.size()) == exact_max_clique_size(g));
    }
}

TEST_CASE("json round trip") {
    RngStream rng(12);
    auto g = erdos_renyi(15, 0.35, rng);
    auto g2 = CommGraph::from_json(g.to_json());
    CHECK(g2.m() == g.m());
    CHECK(g2.edges() == g.edges());
}

TEST_CASE("graph rejects self loops and out-of-range vertices") {
    CommGraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_SUITE_END();
