#include "percolour/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace percolour {

namespace {

std::string describe_vertex(int v, const std::vector<long long>* labels) {
    if (labels != nullptr) return std::to_string((*labels)[static_cast<size_t>(v)]);
    return std::to_string(v);
}

}  // namespace

Graph Graph::validated(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<long long>* labels) {
    if (n < 2) throw InputError("graph must have at least one edge (got " + std::to_string(n) + " vertices)");
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw InputError("loop edge at vertex " + describe_vertex(u, labels));
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    int m = 0;
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += static_cast<int>(nb.size());
    }
    m /= 2;
    if (m == 0) throw InputError("graph has no edges");

    // Connectivity from vertex 0.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                q.push(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw InputError("graph is disconnected: vertex " + describe_vertex(v, labels) +
                             " is unreachable from vertex " + describe_vertex(0, labels));

    Graph g;
    g.n_ = n;
    g.m_ = m;
    g.adj_ = std::move(adj);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return validated(n, edges, nullptr);
}

const std::vector<int>& Graph::neighbours(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbours(u);
    if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = n_;
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int v = 0; v < n_; ++v)
        for (int w : adj_[static_cast<size_t>(v)])
            if (v < w) out.emplace_back(v, w);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> labels;                      // dense id -> input id
    std::unordered_map<long long, int> dense;           // input id -> dense id
    auto intern = [&](long long raw) {
        auto it = dense.find(raw);
        if (it != dense.end()) return it->second;
        int id = static_cast<int>(labels.size());
        dense.emplace(raw, id);
        labels.push_back(raw);
        return id;
    };

    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::string payload(line.substr(0, line.find('#')));
        std::istringstream in(payload);
        long long u, v;
        if (!(in >> u)) {
            std::string rest;
            in.clear();
            if (in >> rest)
                throw InputError("line " + std::to_string(line_no) + ": expected \"u v\"");
            continue;  // blank or comment-only line
        }
        if (!(in >> v) || u < 0 || v < 0)
            throw InputError("line " + std::to_string(line_no) + ": expected two nonnegative integers");
        std::string trailing;
        if (in >> trailing)
            throw InputError("line " + std::to_string(line_no) + ": trailing tokens after edge");
        if (u == v)
            throw InputError("line " + std::to_string(line_no) + ": loop edge " + std::to_string(u) +
                             " " + std::to_string(v));
        int du = intern(u);  // sequenced: ids must follow first appearance
        int dv = intern(v);
        edges.emplace_back(du, dv);
    }
    if (edges.empty()) throw InputError("empty input: no edges found");
    return Graph::validated(static_cast<int>(labels.size()), edges, &labels);
}

std::string canonical_edge_text(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::path: return "path";
        case GraphKind::cycle: return "cycle";
        case GraphKind::star: return "star";
        case GraphKind::extended_star: return "extended_star";
        case GraphKind::tree_other: return "tree_other";
        case GraphKind::general: return "general";
    }
    return "?";
}

GraphClass classify(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const bool tree = (m == n - 1);

    if (!tree) {
        bool all_two = true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != 2) { all_two = false; break; }
        if (all_two) return {GraphKind::cycle, 0, n, 0, std::nullopt};
        GraphClass c{GraphKind::general, 0, 0, 0, std::nullopt};
        c.girth = girth(g);
        return c;
    }

    std::vector<int> branches = branch_vertices(g);
    if (branches.empty()) return {GraphKind::path, m, 0, 0, std::nullopt};
    if (branches.size() > 1) return {GraphKind::tree_other, 0, 0, 0, std::nullopt};

    // One branch vertex: arms are the paths hanging off it. Arm length from
    // the branch vertex b towards neighbour w = size of w's subtree path.
    int b = branches.front();
    std::vector<int> arm_lengths;
    for (int w : g.neighbours(b)) {
        int len = 1, prev = b, cur = w;
        while (g.degree(cur) == 2) {
            int nxt = g.neighbours(cur)[0] == prev ? g.neighbours(cur)[1] : g.neighbours(cur)[0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arm_lengths.push_back(len);
    }
    std::sort(arm_lengths.rbegin(), arm_lengths.rend());
    int diameter = arm_lengths[0] + arm_lengths[1];
    bool all_unit = arm_lengths[0] == 1;
    GraphKind kind = all_unit ? GraphKind::star : GraphKind::extended_star;
    return {kind, 0, 0, diameter, std::nullopt};
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::queue<int> q;
    colour[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbours(v)) {
            if (colour[static_cast<size_t>(w)] == -1) {
                colour[static_cast<size_t>(w)] = 1 - colour[static_cast<size_t>(v)];
                parent[static_cast<size_t>(w)] = v;
                q.push(w);
            } else if (colour[static_cast<size_t>(w)] == colour[static_cast<size_t>(v)]) {
                // Assemble the odd closed walk: v up to the meeting point, the
                // matching prefix of w's root path reversed, then edge w-v.
                auto root_path = [&](int x) {
                    std::vector<int> p;
                    for (int cur = x; cur != -1; cur = parent[static_cast<size_t>(cur)]) p.push_back(cur);
                    std::reverse(p.begin(), p.end());
                    return p;  // root ... x
                };
                std::vector<int> pv = root_path(v), pw = root_path(w);
                size_t i = 0;
                while (i + 1 < pv.size() && i + 1 < pw.size() && pv[i + 1] == pw[i + 1]) ++i;
                std::vector<int> walk(pv.begin() + static_cast<long>(i), pv.end());
                for (size_t j = pw.size(); j-- > i;) walk.push_back(pw[j]);
                // walk: lca..v, w..lca — closed, length (|pv|-i-1)+(|pw|-i-1)+1, odd.
                BipartiteCheck out;
                out.odd_closed_walk = std::move(walk);
                return out;
            }
        }
    }
    Bipartition part;
    for (int v = 0; v < n; ++v)
        (colour[static_cast<size_t>(v)] == 0 ? part.side0 : part.side1).push_back(v);
    BipartiteCheck out;
    out.partition = std::move(part);
    return out;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() == n - 1) return std::nullopt;
    int best = n + 1;
    std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (2 * dist[static_cast<size_t>(v)] >= best) continue;
            for (int w : g.neighbours(v)) {
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    q.push(w);
                } else if (w != parent[static_cast<size_t>(v)] && v != parent[static_cast<size_t>(w)]) {
                    best = std::min(best, dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(w)] + 1);
                }
            }
        }
    }
    return best;
}

int distance(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw InputError("vertex id out of range: " + std::to_string(u));
    if (v < 0 || v >= n) throw InputError("vertex id out of range: " + std::to_string(v));
    if (u == v) return 0;
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : g.neighbours(x)) {
            if (dist[static_cast<size_t>(w)] != -1) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(x)] + 1;
            if (w == v) return dist[static_cast<size_t>(w)];
            q.push(w);
        }
    }
    throw Error("unreachable vertex in a connected graph");  // cannot happen
}

std::vector<int> branch_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) out.push_back(v);
    return out;
}

namespace {

constexpr long long kCycleBudget = 5'000'000;  // DFS steps across all roots

void cycle_dfs(const Graph& g, int root, std::vector<int>& path, std::vector<char>& on_path,
               std::vector<std::vector<int>>& out, long long& budget) {
    if (--budget < 0)
        throw CapError("cycle enumeration budget exceeded; the graph is too large for exact search");
    int v = path.back();
    for (int w : g.neighbours(v)) {
        if (w == root && path.size() >= 3) {
            // Each cycle appears twice (two directions); keep the one whose
            // second vertex is smaller than its last.
            if (path[1] < path.back()) out.push_back(path);
        } else if (w > root && !on_path[static_cast<size_t>(w)]) {
            path.push_back(w);
            on_path[static_cast<size_t>(w)] = 1;
            cycle_dfs(g, root, path, on_path, out, budget);
            on_path[static_cast<size_t>(w)] = 0;
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_cycles(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    long long budget = kCycleBudget;
    for (int root = 0; root < n; ++root) {
        std::vector<int> path{root};
        on_path[static_cast<size_t>(root)] = 1;
        cycle_dfs(g, root, path, on_path, out, budget);
        on_path[static_cast<size_t>(root)] = 0;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<int> cycle_lengths(const Graph& g) {
    std::vector<int> lens;
    for (const auto& c : enumerate_cycles(g)) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    return lens;
}

}  // namespace percolour
