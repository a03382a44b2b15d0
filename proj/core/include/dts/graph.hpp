#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dts/rng.hpp"

namespace dts {

// Undirected communication graph over m agents, 0-indexed, no self-loops.
class CommGraph {
public:
    explicit CommGraph(int m);
    CommGraph(int m, const std::vector<std::pair<int, int>>& edges);

    static CommGraph complete(int m);
    static CommGraph empty(int m) { return CommGraph(m); }

    int m() const { return m_; }
    std::size_t edge_count() const;
    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);

    const std::set<int>& neighbors(int i) const;

    // Adjacency as a bitmask row (valid for m <= 64).
    std::uint64_t adjacency_bits(int i) const;

    std::vector<std::pair<int, int>> edges() const;

    std::string to_json() const;
    static CommGraph from_json(const std::string& text);

private:
    int m_;
    std::vector<std::set<int>> adj_;
};

CommGraph erdos_renyi(int m, double p, RngStream& rng);

// Disjoint cliques covering every vertex.
struct CliqueCover {
    std::vector<std::vector<int>> parts;
};

// Greedy cover: grow a clique from the lowest-index uncovered vertex by
// adding admissible lowest-index vertices. Part count >= theta(G), so bounds
// computed from it stay valid (possibly loose).
CliqueCover greedy_clique_cover(const CommGraph& g);

bool is_clique(const CommGraph& g, const std::vector<int>& vertices);
bool is_valid_cover(const CommGraph& g, const CliqueCover& cover);

// Exact maximum clique (branch and bound over bitsets) for m <= 64;
// greedy fallback above.
std::vector<int> max_clique(const CommGraph& g);

}  // namespace dts
