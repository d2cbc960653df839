#include "percolour/classic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace percolour {

namespace {

// Dense adjacency over at most 32 vertices, enough for both caps.
struct DenseGraph {
    int n;
    std::vector<std::uint32_t> adj;

    explicit DenseGraph(int n_) : n(n_), adj(static_cast<size_t>(n_), 0) {}
    void add_edge(int u, int v) {
        adj[static_cast<size_t>(u)] |= std::uint32_t{1} << v;
        adj[static_cast<size_t>(v)] |= std::uint32_t{1} << u;
    }
};

std::vector<int> order_by_degree(const DenseGraph& g) {
    std::vector<int> order(static_cast<size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(g.adj[static_cast<size_t>(a)]) > std::popcount(g.adj[static_cast<size_t>(b)]);
    });
    return order;
}

// Greedy clique seeded at each vertex in degree order.
std::vector<int> greedy_clique(const DenseGraph& g) {
    std::vector<int> best;
    const auto order = order_by_degree(g);
    for (int seed : order) {
        std::vector<int> clique{seed};
        std::uint32_t common = g.adj[static_cast<size_t>(seed)];
        for (int v : order) {
            if (!(common & (std::uint32_t{1} << v))) continue;
            clique.push_back(v);
            common &= g.adj[static_cast<size_t>(v)];
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

int greedy_colouring(const DenseGraph& g, const std::vector<int>& order) {
    std::vector<int> colour(static_cast<size_t>(g.n), -1);
    int used = 0;
    for (int v : order) {
        std::uint32_t taken = 0;
        for (int w = 0; w < g.n; ++w)
            if ((g.adj[static_cast<size_t>(v)] >> w & 1) && colour[static_cast<size_t>(w)] >= 0)
                taken |= std::uint32_t{1} << colour[static_cast<size_t>(w)];
        int c = std::countr_one(taken);
        colour[static_cast<size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// Is the graph k-colourable? DSATUR-style branch and bound: always branch on
// the most saturated uncoloured vertex, and never open more than one fresh
// colour (colour classes are interchangeable).
bool colourable(const DenseGraph& g, int k, std::vector<int>& colour, int coloured, int used) {
    if (coloured == g.n) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    std::uint32_t pick_taken = 0;
    for (int v = 0; v < g.n; ++v) {
        if (colour[static_cast<size_t>(v)] >= 0) continue;
        std::uint32_t taken = 0;
        for (int w = 0; w < g.n; ++w)
            if ((g.adj[static_cast<size_t>(v)] >> w & 1) && colour[static_cast<size_t>(w)] >= 0)
                taken |= std::uint32_t{1} << colour[static_cast<size_t>(w)];
        int sat = std::popcount(taken);
        int deg = std::popcount(g.adj[static_cast<size_t>(v)]);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
            pick_taken = taken;
        }
    }
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        if (pick_taken >> c & 1) continue;
        colour[static_cast<size_t>(pick)] = c;
        if (colourable(g, k, colour, coloured + 1, std::max(used, c + 1))) return true;
        colour[static_cast<size_t>(pick)] = -1;
    }
    return false;
}

int exact_chi(const DenseGraph& g) {
    const auto clique = greedy_clique(g);
    int lb = static_cast<int>(clique.size());
    int ub = greedy_colouring(g, order_by_degree(g));
    for (int k = lb; k < ub; ++k) {
        std::vector<int> colour(static_cast<size_t>(g.n), -1);
        // Pre-colour the clique: its vertices need pairwise distinct colours.
        int pre = 0;
        for (int v : clique) colour[static_cast<size_t>(v)] = pre++;
        if (colourable(g, k, colour, pre, pre)) return k;
    }
    return ub;
}

}  // namespace

int chi(const Graph& g) {
    if (g.vertex_count() > kChiVertexCap)
        throw CapError("chi is exact-only and capped at " + std::to_string(kChiVertexCap) +
                       " vertices (got " + std::to_string(g.vertex_count()) + ")");
    DenseGraph d(g.vertex_count());
    for (auto [u, v] : g.edges()) d.add_edge(u, v);
    return exact_chi(d);
}

int chi_star(const Graph& g) {
    if (g.edge_count() > kChiStarEdgeCap)
        throw CapError("chi_star is exact-only and capped at " + std::to_string(kChiStarEdgeCap) +
                       " edges (got " + std::to_string(g.edge_count()) + ")");
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    DenseGraph line(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[static_cast<size_t>(i)];
            auto [c, d] = edges[static_cast<size_t>(j)];
            if (a == c || a == d || b == c || b == d) line.add_edge(i, j);
        }
    int result = exact_chi(line);
    int delta = g.max_degree();
    if (result != delta && result != delta + 1)
        throw Error("edge chromatic number outside Vizing's range");  // cannot happen
    return result;
}

ChromaResult chroma(const Graph& g) {
    ChromaResult r;
    r.chi = chi(g);
    r.chi_star = chi_star(g);
    r.delta = g.max_degree();
    r.vizing_class = r.chi_star == r.delta ? VizingClass::one : VizingClass::two;
    return r;
}

const char* to_string(VizingClass c) {
    return c == VizingClass::one ? "one" : "two";
}

}  // namespace percolour
