#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "percolour/errors.hpp"

namespace percolour {

/// Simple connected undirected graph with dense, ordering-stable vertex ids.
///
/// Invariants enforced at construction: no loops, no multi-edges, at least
/// one edge, connected. Instances are immutable and safe to share across
/// threads.
class Graph {
public:
    /// Builds a graph on vertices 0..n-1. Duplicate edges are collapsed,
    /// loops and disconnected inputs are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    bool has_edge(int u, int v) const;

    int min_degree() const;
    int max_degree() const;

    /// All edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    Graph() = default;

    // Shared validating constructor; `labels`, when given, maps dense ids
    // back to the ids used in the input text for error messages.
    static Graph validated(int n, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<long long>* labels);

    friend Graph parse_edge_list(std::string_view text);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Parses line-oriented edge-list text: one "u v" pair per line, '#' starts
/// a comment, LF or CRLF. Vertex ids are compacted to 0..n-1 in order of
/// first appearance; duplicate edges collapse. Error messages refer to the
/// ids as written in the input.
Graph parse_edge_list(std::string_view text);

/// Canonical serialization: one "min max" line per edge, sorted.
std::string canonical_edge_text(const Graph& g);

enum class GraphKind { path, cycle, star, extended_star, tree_other, general };

const char* to_string(GraphKind kind);

struct GraphClass {
    GraphKind kind;
    int path_length = 0;        // kind == path: number of edges
    int cycle_length = 0;       // kind == cycle
    int diameter = 0;           // kind == star / extended_star
    std::optional<int> girth;   // kind == general
};

/// Structural classification. A star (all arms of length 1) is reported as
/// its own kind for readability; downstream logic treats it as an extended
/// star of diameter 2.
GraphClass classify(const Graph& g);

struct Bipartition {
    std::vector<int> side0;  // side containing vertex 0
    std::vector<int> side1;
};

struct BipartiteCheck {
    std::optional<Bipartition> partition;
    std::vector<int> odd_closed_walk;  // v0,...,vL with vL == v0 and L odd; empty when bipartite

    bool bipartite() const { return partition.has_value(); }
};

/// Two-colours the graph by BFS. On failure the returned witness is an odd
/// closed walk assembled from the BFS tree plus the conflicting edge.
BipartiteCheck is_bipartite(const Graph& g);

/// Length of a shortest cycle, or nullopt for trees. BFS from every vertex.
std::optional<int> girth(const Graph& g);

/// Shortest-path edge count. Rejects invalid vertex ids.
int distance(const Graph& g, int u, int v);

/// All vertices of degree >= 3, ascending.
std::vector<int> branch_vertices(const Graph& g);

/// Exhaustive simple-cycle enumeration, each cycle listed once as a vertex
/// sequence starting at its smallest vertex. Desk scale only: rejects
/// graphs with more than 16 vertices.
std::vector<std::vector<int>> enumerate_cycles(const Graph& g);

/// Sorted distinct cycle lengths of enumerate_cycles.
std::vector<int> cycle_lengths(const Graph& g);

}  // namespace percolour
