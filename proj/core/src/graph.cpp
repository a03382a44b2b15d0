#include "dts/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dts {

CommGraph::CommGraph(int m) : m_(m), adj_(static_cast<std::size_t>(std::max(m, 0))) {
    if (m < 1) throw std::invalid_argument("CommGraph: m must be >= 1");
}

CommGraph::CommGraph(int m, const std::vector<std::pair<int, int>>& edges) : CommGraph(m) {
    for (const auto& [i, j] : edges) add_edge(i, j);
}

CommGraph CommGraph::complete(int m) {
    CommGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    return g;
}

std::size_t CommGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& s : adj_) deg_sum += s.size();
    return deg_sum / 2;
}

bool CommGraph::has_edge(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= m_) throw std::out_of_range("CommGraph: vertex out of range");
    return adj_[static_cast<std::size_t>(i)].count(j) > 0;
}

void CommGraph::add_edge(int i, int j) {
    if (i < 0 || i >= m_ || j < 0 || j >= m_) throw std::out_of_range("CommGraph: vertex out of range");
    if (i == j) throw std::invalid_argument("CommGraph: self-loops not allowed");
    adj_[static_cast<std::size_t>(i)].insert(j);
    adj_[static_cast<std::size_t>(j)].insert(i);
}

const std::set<int>& CommGraph::neighbors(int i) const {
    if (i < 0 || i >= m_) throw std::out_of_range("CommGraph::neighbors: vertex out of range");
    return adj_[static_cast<std::size_t>(i)];
}

std::uint64_t CommGraph::adjacency_bits(int i) const {
    std::uint64_t bits = 0;
    for (int j : neighbors(i)) bits |= (std::uint64_t{1} << j);
    return bits;
}

std::vector<std::pair<int, int>> CommGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m_; ++i)
        for (int j : adj_[static_cast<std::size_t>(i)])
            if (j > i) out.emplace_back(i, j);
    return out;
}

std::string CommGraph::to_json() const {
    nlohmann::json j;
    j["m"] = m_;
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges()) j["edges"].push_back({a, b});
    return j.dump();
}

CommGraph CommGraph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CommGraph g(j.at("m").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

CommGraph erdos_renyi(int m, double p, RngStream& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p must be in [0,1]");
    CommGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (rng.uniform() < p) g.add_edge(i, j);
    return g;
}

CliqueCover greedy_clique_cover(const CommGraph& g) {
    CliqueCover cover;
    std::vector<bool> covered(static_cast<std::size_t>(g.m()), false);
    for (int v = 0; v < g.m(); ++v) {
        if (covered[static_cast<std::size_t>(v)]) continue;
        std::vector<int> part{v};
        covered[static_cast<std::size_t>(v)] = true;
        for (int u = v + 1; u < g.m(); ++u) {
            if (covered[static_cast<std::size_t>(u)]) continue;
            bool admissible = true;
            for (int w : part)
                if (!g.has_edge(u, w)) {
                    admissible = false;
                    break;
                }
            if (admissible) {
                part.push_back(u);
                covered[static_cast<std::size_t>(u)] = true;
            }
        }
        cover.parts.push_back(std::move(part));
    }
    return cover;
}

bool is_clique(const CommGraph& g, const std::vector<int>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (!g.has_edge(vertices[a], vertices[b])) return false;
    return true;
}

bool is_valid_cover(const CommGraph& g, const CliqueCover& cover) {
    std::vector<int> seen(static_cast<std::size_t>(g.m()), 0);
    for (const auto& part : cover.parts) {
        if (!is_clique(g, part)) return false;
        for (int v : part) {
            if (v < 0 || v >= g.m()) return false;
            ++seen[static_cast<std::size_t>(v)];
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

namespace {

// Classic bitset branch and bound: extend `current` with candidates, prune
// when |current| + |candidates| cannot beat the incumbent.
void max_clique_bb(const std::vector<std::uint64_t>& adj, std::uint64_t current,
                   std::uint64_t candidates, int size, std::uint64_t& best, int& best_size) {
    if (size > best_size) {
        best_size = size;
        best = current;
    }
    while (candidates != 0) {
        if (size + std::popcount(candidates) <= best_size) return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        max_clique_bb(adj, current | (std::uint64_t{1} << v),
                      candidates & adj[static_cast<std::size_t>(v)], size + 1, best, best_size);
    }
}

}  // namespace

std::vector<int> max_clique(const CommGraph& g) {
    if (g.m() > 64) {
        // Greedy fallback: best clique grown from each start vertex.
        std::vector<int> best;
        for (int v = 0; v < g.m(); ++v) {
            std::vector<int> part{v};
            for (int u = 0; u < g.m(); ++u) {
                if (u == v) continue;
                bool ok = true;
                for (int w : part)
                    if (!g.has_edge(u, w)) {
                        ok = false;
                        break;
                    }
                if (ok) part.push_back(u);
            }
            if (part.size() > best.size()) best = std::move(part);
        }
        std::sort(best.begin(), best.end());
        return best;
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) adj[static_cast<std::size_t>(i)] = g.adjacency_bits(i);
    std::uint64_t all = g.m() == 64 ? ~std::uint64_t{0}
                                    : ((std::uint64_t{1} << g.m()) - 1);
    std::uint64_t best = 0;
    int best_size = 0;
    max_clique_bb(adj, 0, all, 0, best, best_size);
    std::vector<int> out;
    for (int v = 0; v < g.m(); ++v)
        if (best & (std::uint64_t{1} << v)) out.push_back(v);
    return out;
}

}  // namespace dts
