#include "percolour/vertex_periodic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace percolour {

namespace {

void check_t(const Graph& g, int t) {
    if (t < 1 || t > g.vertex_count())
        throw InputError("t must be in 1.." + std::to_string(g.vertex_count()) + " (got " +
                         std::to_string(t) + ")");
}

// Enumerates all simple paths of exactly t edges starting at `path[0]`,
// invoking `sink(path)` for each; closed walks back to the start of length t
// invoke `cyc()` instead.
template <typename Sink, typename Cyc>
void path_dfs(const Graph& g, int t, std::vector<int>& path, std::vector<char>& on_path, Sink&& sink,
              Cyc&& cyc) {
    if (static_cast<int>(path.size()) == t + 1) {
        sink(path);
        return;
    }
    int v = path.back();
    for (int w : g.neighbours(v)) {
        if (w == path.front() && static_cast<int>(path.size()) == t && t >= 3) cyc();
        if (on_path[static_cast<size_t>(w)]) continue;
        path.push_back(w);
        on_path[static_cast<size_t>(w)] = 1;
        path_dfs(g, t, path, on_path, sink, cyc);
        on_path[static_cast<size_t>(w)] = 0;
        path.pop_back();
    }
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

PathRelation path_relation(const Graph& g, int t) {
    check_t(g, t);
    const int n = g.vertex_count();
    std::set<std::pair<int, int>> pairs;
    std::set<int> self_c;
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        std::vector<int> path{u};
        on_path[static_cast<size_t>(u)] = 1;
        path_dfs(
            g, t, path, on_path,
            [&](const std::vector<int>& p) {
                int a = p.front(), b = p.back();
                if (a < b) pairs.emplace(a, b);  // the reverse path reports (b, a)
            },
            [&] { self_c.insert(u); });
        on_path[static_cast<size_t>(u)] = 0;
    }

    PathRelation rel;
    rel.t = t;
    rel.pairs.assign(pairs.begin(), pairs.end());
    std::set<int> touched;
    for (auto [a, b] : rel.pairs) {
        touched.insert(a);
        touched.insert(b);
    }
    rel.constrained.assign(touched.begin(), touched.end());
    rel.self_constrained.assign(self_c.begin(), self_c.end());
    return rel;
}

ChiT chi_t(const Graph& g, int t) {
    const auto rel = path_relation(g, t);
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (auto [a, b] : rel.pairs) uf.unite(a, b);
    std::set<int> roots;
    for (int v = 0; v < n; ++v) roots.insert(uf.find(v));

    ChiT out;
    out.k = static_cast<int>(roots.size());
    std::set<int> touched(rel.constrained.begin(), rel.constrained.end());
    for (int v = 0; v < n; ++v)
        if (!touched.count(v)) out.unconstrained.push_back(v);
    return out;
}

VertexColouring build_t_periodic_colouring(const Graph& g, int t) {
    const auto rel = path_relation(g, t);
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (auto [a, b] : rel.pairs) uf.unite(a, b);

    // Classes numbered by smallest contained vertex; union-find roots are
    // already the class minima.
    std::vector<int> colour(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (colour[static_cast<size_t>(r)] == -1) colour[static_cast<size_t>(r)] = next++;
        colour[static_cast<size_t>(v)] = colour[static_cast<size_t>(r)];
    }
    return {t, next, std::move(colour)};
}

std::vector<PathViolation> verify_t_periodic(const Graph& g, int t, const VertexColouring& c) {
    check_t(g, t);
    const int n = g.vertex_count();
    if (static_cast<int>(c.colour_of.size()) != n)
        throw InputError("colouring is not total: " + std::to_string(c.colour_of.size()) +
                         " colours for " + std::to_string(n) + " vertices");

    std::vector<PathViolation> out;
    std::set<std::pair<int, int>> reported;
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        std::vector<int> path{u};
        on_path[static_cast<size_t>(u)] = 1;
        path_dfs(
            g, t, path, on_path,
            [&](const std::vector<int>& p) {
                int a = p.front(), b = p.back();
                if (a > b) return;
                if (c.colour_of[static_cast<size_t>(a)] == c.colour_of[static_cast<size_t>(b)]) return;
                if (reported.emplace(a, b).second) out.push_back({p});
            },
            [] {});
        on_path[static_cast<size_t>(u)] = 0;
    }
    return out;
}

namespace {

// Simple path of exactly `len` edges from v0 avoiding `blocked`; ascending
// neighbour order makes the result deterministic.
bool pendant_dfs(const Graph& g, int len, std::vector<int>& path, std::vector<char>& blocked) {
    if (static_cast<int>(path.size()) == len + 1) return true;
    for (int w : g.neighbours(path.back())) {
        if (blocked[static_cast<size_t>(w)]) continue;
        blocked[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        if (pendant_dfs(g, len, path, blocked)) return true;
        path.pop_back();
        blocked[static_cast<size_t>(w)] = 0;
    }
    return false;
}

}  // namespace

std::optional<TauShape> tau_shape(const Graph& g, int t, const VertexColouring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.colour_of.size()) != n)
        throw InputError("colouring is not total over V");
    if (g.min_degree() < 2)
        throw InputError("minimum degree must be >= 2 (got " + std::to_string(g.min_degree()) + ")");
    if (classify(g).kind == GraphKind::cycle) throw InputError("graph must not be a cycle");
    if (t < 3) throw InputError("t must be >= 3 (got " + std::to_string(t) + ")");
    const auto gr = girth(g);
    if (!gr || t > *gr)
        throw InputError("t must not exceed the girth (t=" + std::to_string(t) + ", girth=" +
                         std::to_string(gr.value_or(0)) + ")");

    const int tau = t / 2;
    const auto cycles = enumerate_cycles(g);  // sorted by (length, sequence)
    for (const auto& cyc : cycles) {
        const int len = static_cast<int>(cyc.size());
        if (len < t) continue;
        for (size_t start = 0; start < cyc.size(); ++start) {
            std::vector<char> blocked(static_cast<size_t>(n), 0);
            for (int v : cyc) blocked[static_cast<size_t>(v)] = 1;
            std::vector<int> pendant{cyc[start]};
            if (!pendant_dfs(g, tau, pendant, blocked)) continue;

            TauShape shape;
            shape.tau = tau;
            shape.cycle.assign(cyc.begin() + static_cast<long>(start), cyc.end());
            shape.cycle.insert(shape.cycle.end(), cyc.begin(), cyc.begin() + static_cast<long>(start));
            shape.pendant.assign(pendant.begin() + 1, pendant.end());

            auto cyc_colour = [&](int idx) {
                int i = ((idx % len) + len) % len;
                return c.colour_of[static_cast<size_t>(shape.cycle[static_cast<size_t>(i)])];
            };
            shape.slots.push_back(cyc_colour(0));
            for (int j = 1; j <= tau; ++j)
                shape.slots.push_back(c.colour_of[static_cast<size_t>(shape.pendant[static_cast<size_t>(j - 1)])]);

            // Identities from walking t-paths through the attachment point:
            // c(w_j) = c(v_j) = c(v_{t-j}) = c(v_{-j}) = c(v_{j-t}).
            shape.pattern_holds = true;
            for (int j = 1; j <= tau; ++j) {
                int cw = shape.slots[static_cast<size_t>(j)];
                if (cw != cyc_colour(j) || cw != cyc_colour(t - j) || cw != cyc_colour(-j) ||
                    cw != cyc_colour(j - t))
                    shape.pattern_holds = false;
            }

            shape.pattern.push_back(shape.slots[0]);
            for (int j = 1; j <= tau; ++j) shape.pattern.push_back(shape.slots[static_cast<size_t>(j)]);
            if (t % 2 == 1) shape.pattern.push_back(shape.slots[static_cast<size_t>(tau)]);
            for (int j = tau - 1; j >= 1; --j)
                shape.pattern.push_back(shape.slots[static_cast<size_t>(j)]);

            std::set<int> distinct(shape.slots.begin(), shape.slots.end());
            shape.distinct_slots = static_cast<int>(distinct.size());
            shape.attains_bound = shape.distinct_slots == tau + 1;
            return shape;
        }
    }
    return std::nullopt;
}

}  // namespace percolour
