#include "percolour/oracles.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "percolour/oriented.hpp"

namespace percolour {

namespace {

// Backtracking k-class assignment over the oriented edges in a fixed order,
// checking the successor rule against every already-assigned arc neighbour
// and non-emptiness at completion.
bool assign_classes(const std::vector<std::vector<int>>& succ,
                    const std::vector<std::vector<int>>& pred, const std::vector<int>& order,
                    int k, size_t depth, std::vector<int>& cls, std::vector<int>& class_count) {
    if (depth == order.size()) {
        for (int c : class_count)
            if (c == 0) return false;
        return true;
    }
    int unassigned_left = static_cast<int>(order.size() - depth);
    int empty_classes = static_cast<int>(std::count(class_count.begin(), class_count.end(), 0));
    if (empty_classes > unassigned_left) return false;

    const int e = order[depth];
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int h : succ[static_cast<size_t>(e)])
            if (cls[static_cast<size_t>(h)] != -1 && cls[static_cast<size_t>(h)] != (c + 1) % k)
                ok = false;
        for (int t : pred[static_cast<size_t>(e)])
            if (ok && cls[static_cast<size_t>(t)] != -1 && (cls[static_cast<size_t>(t)] + 1) % k != c)
                ok = false;
        if (!ok) continue;
        cls[static_cast<size_t>(e)] = c;
        ++class_count[static_cast<size_t>(c)];
        if (assign_classes(succ, pred, order, k, depth + 1, cls, class_count)) return true;
        --class_count[static_cast<size_t>(c)];
        cls[static_cast<size_t>(e)] = -1;
    }
    return false;
}

}  // namespace

int oracle_chi_o(const Graph& g) {
    if (g.edge_count() > kOracleEdgeCap)
        throw CapError("oracle_chi_o is capped at " + std::to_string(kOracleEdgeCap) +
                       " edges (got " + std::to_string(g.edge_count()) + ")");
    const int ne = 2 * g.edge_count();
    std::vector<std::vector<int>> succ(static_cast<size_t>(ne)), pred(static_cast<size_t>(ne));
    for (const auto& arc : nb_arcs(g)) {
        int t = oriented_edge_index(g, arc.tail);
        int h = oriented_edge_index(g, arc.head);
        succ[static_cast<size_t>(t)].push_back(h);
        pred[static_cast<size_t>(h)].push_back(t);
    }

    // Fixed assignment order: breadth-first over the (undirected) arc
    // adjacency from the smallest unvisited edge, so all but the component
    // roots are constrained by an earlier edge when their turn comes.
    std::vector<int> order;
    std::vector<char> seen(static_cast<size_t>(ne), 0);
    for (int root = 0; root < ne; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            order.push_back(e);
            for (const auto& nbrs : {succ[static_cast<size_t>(e)], pred[static_cast<size_t>(e)]})
                for (int f : nbrs)
                    if (!seen[static_cast<size_t>(f)]) {
                        seen[static_cast<size_t>(f)] = 1;
                        q.push(f);
                    }
        }
    }

    for (int k = ne; k >= 2; --k) {
        std::vector<int> cls(static_cast<size_t>(ne), -1);
        std::vector<int> class_count(static_cast<size_t>(k), 0);
        if (assign_classes(succ, pred, order, k, 0, cls, class_count)) return k;
    }
    return 1;
}

namespace {

// All length-t endpoint pairs by walk enumeration: extend walks edge by edge
// and keep only those whose vertices are pairwise distinct.
void walk_extend(const Graph& g, int t, std::vector<int>& walk,
                 std::set<std::pair<int, int>>& pairs) {
    if (static_cast<int>(walk.size()) == t + 1) {
        std::vector<int> sorted = walk;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
        int a = walk.front(), b = walk.back();
        pairs.emplace(std::min(a, b), std::max(a, b));
        return;
    }
    for (int w : g.neighbours(walk.back())) {
        walk.push_back(w);
        walk_extend(g, t, walk, pairs);
        walk.pop_back();
    }
}

}  // namespace

int oracle_chi_t(const Graph& g, int t) {
    const int n = g.vertex_count();
    if (n > kOracleVertexCap)
        throw CapError("oracle_chi_t is capped at " + std::to_string(kOracleVertexCap) +
                       " vertices (got " + std::to_string(n) + ")");
    if (t < 1 || t > n)
        throw InputError("t must be in 1.." + std::to_string(n) + " (got " + std::to_string(t) + ")");

    std::set<std::pair<int, int>> pair_set;
    for (int u = 0; u < n; ++u) {
        std::vector<int> walk{u};
        walk_extend(g, t, walk, pair_set);
    }
    std::vector<std::pair<int, int>> pairs(pair_set.begin(), pair_set.end());

    // Enumerate set partitions as restricted growth strings; colourings are
    // checked up to relabelling, which the endpoint condition ignores.
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    int best = 0;
    while (true) {
        int classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
        bool ok = true;
        for (auto [a, b] : pairs)
            if (rgs[static_cast<size_t>(a)] != rgs[static_cast<size_t>(b)]) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, classes);

        // next restricted growth string
        int i = n - 1;
        while (i > 0) {
            int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return best;
}

}  // namespace percolour
