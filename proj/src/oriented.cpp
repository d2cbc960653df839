#include "percolour/oriented.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace percolour {

namespace {

// Offsets of each vertex's block in the canonical oriented-edge order.
std::vector<int> edge_offsets(const Graph& g) {
    std::vector<int> off(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        off[static_cast<size_t>(v) + 1] = off[static_cast<size_t>(v)] + g.degree(v);
    return off;
}

int index_of(const Graph& g, const std::vector<int>& off, OrientedEdge e) {
    const auto& nb = g.neighbours(e.input);
    auto it = std::lower_bound(nb.begin(), nb.end(), e.output);
    if (it == nb.end() || *it != e.output) return -1;
    return off[static_cast<size_t>(e.input)] + static_cast<int>(it - nb.begin());
}

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

std::vector<OrientedEdge> oriented_edges(const Graph& g) {
    std::vector<OrientedEdge> out;
    out.reserve(static_cast<size_t>(2 * g.edge_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbours(v)) out.push_back({v, w});
    return out;
}

int oriented_edge_index(const Graph& g, OrientedEdge e) {
    if (e.input < 0 || e.input >= g.vertex_count())
        throw InputError("oriented edge input out of range: " + std::to_string(e.input));
    int idx = index_of(g, edge_offsets(g), e);
    if (idx < 0)
        throw InputError("not an edge of the graph: [" + std::to_string(e.input) + "," +
                         std::to_string(e.output) + "]");
    return idx;
}

std::vector<NBArc> nb_arcs(const Graph& g) {
    std::vector<NBArc> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbours(v))
            for (int z : g.neighbours(w))
                if (z != v) out.push_back({{v, w}, {w, z}});
    return out;
}

std::vector<ConstraintComponent> constraint_components(const Graph& g) {
    const int ne = 2 * g.edge_count();
    const auto off = edge_offsets(g);
    const auto edges = oriented_edges(g);

    // Arc adjacency over oriented-edge ids: +1 along the arc, -1 against it.
    std::vector<std::vector<std::pair<int, int>>> step(static_cast<size_t>(ne));
    std::vector<std::pair<int, int>> arc_ids;  // (tail id, head id)
    for (int t = 0; t < ne; ++t) {
        OrientedEdge e = edges[static_cast<size_t>(t)];
        for (int z : g.neighbours(e.output))
            if (z != e.input) {
                int h = index_of(g, off, {e.output, z});
                step[static_cast<size_t>(t)].push_back({h, +1});
                step[static_cast<size_t>(h)].push_back({t, -1});
                arc_ids.push_back({t, h});
            }
    }

    std::vector<int> comp_of(static_cast<size_t>(ne), -1);
    std::vector<std::int64_t> rel(static_cast<size_t>(ne), 0);
    std::vector<ConstraintComponent> comps;
    for (int root = 0; root < ne; ++root) {
        if (comp_of[static_cast<size_t>(root)] != -1) continue;
        int cid = static_cast<int>(comps.size());
        ConstraintComponent comp;
        std::queue<int> q;
        comp_of[static_cast<size_t>(root)] = cid;
        rel[static_cast<size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            comp.members.push_back(e);
            for (auto [f, delta] : step[static_cast<size_t>(e)]) {
                if (comp_of[static_cast<size_t>(f)] != -1) continue;
                comp_of[static_cast<size_t>(f)] = cid;
                rel[static_cast<size_t>(f)] = rel[static_cast<size_t>(e)] + delta;
                q.push(f);
            }
        }
        std::sort(comp.members.begin(), comp.members.end());
        comp.rel_value.reserve(comp.members.size());
        for (int e : comp.members) comp.rel_value.push_back(rel[static_cast<size_t>(e)]);
        // Normalise so the smallest value is 0; only differences matter.
        std::int64_t lo = *std::min_element(comp.rel_value.begin(), comp.rel_value.end());
        for (auto& v : comp.rel_value) v -= lo;
        comp.value_set = comp.rel_value;
        std::sort(comp.value_set.begin(), comp.value_set.end());
        comp.value_set.erase(std::unique(comp.value_set.begin(), comp.value_set.end()),
                             comp.value_set.end());
        comps.push_back(std::move(comp));
    }

    // Closed-walk sums form the lattice generated by the arc discrepancies,
    // so the gcd over all arcs is exact (tree arcs contribute 0).
    for (auto [t, h] : arc_ids) {
        int cid = comp_of[static_cast<size_t>(t)];
        std::int64_t disc = rel[static_cast<size_t>(h)] - rel[static_cast<size_t>(t)] - 1;
        comps[static_cast<size_t>(cid)].disc_gcd =
            gcd_nonneg(comps[static_cast<size_t>(cid)].disc_gcd, disc);
    }
    return comps;
}

namespace {

struct CoverState {
    int k;
    std::vector<char> hit;
    int covered = 0;

    explicit CoverState(int k_) : k(k_), hit(static_cast<size_t>(k_), 0) {}
    void add(const std::vector<int>& residues, int shift) {
        for (int r : residues) {
            char& h = hit[static_cast<size_t>((r + shift) % k)];
            covered += 1 - h;
            h = 1;
        }
    }
};

// Depth-first search over per-component shifts so that the shifted residue
// sets cover Z_k. Rotating every shift by a constant preserves both the
// successor rule and coverage, so the first component's shift is pinned to
// 0; the remainder is searched in increasing order, making the first
// solution the lexicographically smallest shift vector. Exponential in the
// component count in the worst case, but a connected graph has at most two
// weak components (two exactly when every degree is <= 2).
bool cover_search(const std::vector<std::vector<int>>& residues, size_t i, const CoverState& state,
                  const std::vector<int>& suffix_sizes, std::vector<int>& shifts) {
    if (state.covered == state.k) {
        shifts.resize(residues.size(), 0);
        return true;
    }
    if (i == residues.size()) return false;
    if (state.covered + suffix_sizes[i] < state.k) return false;
    for (int s = 0; s < state.k; ++s) {
        CoverState next = state;
        next.add(residues[i], s);
        if (cover_search(residues, i + 1, next, suffix_sizes, shifts)) {
            shifts[i] = s;
            return true;
        }
    }
    return false;
}

std::optional<CircularPartition> try_partition(const Graph& g,
                                               const std::vector<ConstraintComponent>& comps,
                                               int k) {
    const int ne = 2 * g.edge_count();
    if (k > ne) return std::nullopt;  // k non-empty classes need k oriented edges
    for (const auto& c : comps)
        if (c.disc_gcd % k != 0) return std::nullopt;

    auto mod_k = [k](std::int64_t x) {
        std::int64_t r = x % k;
        return static_cast<int>(r < 0 ? r + k : r);
    };

    std::vector<std::vector<int>> residues;
    residues.reserve(comps.size());
    for (const auto& c : comps) {
        std::vector<int> res;
        res.reserve(c.value_set.size());
        for (std::int64_t v : c.value_set) res.push_back(mod_k(v));
        std::sort(res.begin(), res.end());
        res.erase(std::unique(res.begin(), res.end()), res.end());
        residues.push_back(std::move(res));
    }

    std::vector<int> suffix_sizes(residues.size() + 1, 0);
    for (size_t i = residues.size(); i-- > 0;)
        suffix_sizes[i] = suffix_sizes[i + 1] + static_cast<int>(residues[i].size());

    CoverState state(k);
    state.add(residues[0], 0);
    std::vector<int> shifts;
    if (!cover_search(residues, 1, state, suffix_sizes, shifts)) return std::nullopt;
    shifts[0] = 0;

    CircularPartition p;
    p.k = k;
    p.class_of.assign(static_cast<size_t>(ne), 0);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (size_t j = 0; j < comps[ci].members.size(); ++j)
            p.class_of[static_cast<size_t>(comps[ci].members[j])] =
                mod_k(comps[ci].rel_value[j] + shifts[ci]);
    return p;
}

}  // namespace

std::optional<CircularPartition> is_circularly_k_partite(const Graph& g, int k) {
    if (k <= 0) throw InputError("k must be positive (got " + std::to_string(k) + ")");
    return try_partition(g, constraint_components(g), k);
}

int chi_o(const Graph& g) {
    const auto comps = constraint_components(g);
    for (int k = 2 * g.edge_count(); k >= 2; --k)
        if (try_partition(g, comps, k)) return k;
    return 1;
}

std::vector<int> feasible_k_set(const Graph& g) {
    const auto comps = constraint_components(g);
    std::vector<int> out;
    for (int k = 1; k <= 2 * g.edge_count(); ++k)
        if (try_partition(g, comps, k)) out.push_back(k);
    return out;
}

std::string PartitionViolation::describe() const {
    std::ostringstream out;
    if (kind == Kind::empty_class) {
        out << "class " << missing_class << " is empty";
    } else {
        out << "arc [" << arc.tail.input << "," << arc.tail.output << "] -> [" << arc.head.input
            << "," << arc.head.output << "] does not step its class by +1";
    }
    return out.str();
}

std::vector<PartitionViolation> verify_partition(const Graph& g, const CircularPartition& p) {
    const int ne = 2 * g.edge_count();
    if (p.k <= 0) throw InputError("partition has nonpositive k");
    if (static_cast<int>(p.class_of.size()) != ne)
        throw InputError("class map is not total: " + std::to_string(p.class_of.size()) +
                         " entries for " + std::to_string(ne) + " oriented edges");
    for (int c : p.class_of)
        if (c < 0 || c >= p.k)
            throw InputError("class id " + std::to_string(c) + " outside 0.." +
                             std::to_string(p.k - 1));

    std::vector<PartitionViolation> out;
    const auto off = edge_offsets(g);
    std::vector<char> used(static_cast<size_t>(p.k), 0);
    for (int c : p.class_of) used[static_cast<size_t>(c)] = 1;
    for (int c = 0; c < p.k; ++c)
        if (!used[static_cast<size_t>(c)])
            out.push_back({PartitionViolation::Kind::empty_class, {}, c});

    const auto edges = oriented_edges(g);
    for (int t = 0; t < ne; ++t) {
        OrientedEdge e = edges[static_cast<size_t>(t)];
        for (int z : g.neighbours(e.output)) {
            if (z == e.input) continue;
            int h = index_of(g, off, {e.output, z});
            if ((p.class_of[static_cast<size_t>(t)] + 1) % p.k != p.class_of[static_cast<size_t>(h)])
                out.push_back({PartitionViolation::Kind::arc, {e, {e.output, z}}, -1});
        }
    }
    return out;
}

}  // namespace percolour
