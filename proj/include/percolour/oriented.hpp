#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "percolour/graph.hpp"

namespace percolour {

/// An edge with a chosen input and output endpoint. Each undirected edge of
/// the host graph yields two of these.
struct OrientedEdge {
    int input;
    int output;

    auto operator<=>(const OrientedEdge&) const = default;
};

/// Non-backtracking arc: tail.output == head.input and tail.input != head.output.
struct NBArc {
    OrientedEdge tail;
    OrientedEdge head;

    auto operator<=>(const NBArc&) const = default;
};

/// Both orientations of every edge, ordered lexicographically by (input, output).
std::vector<OrientedEdge> oriented_edges(const Graph& g);

/// Position of e in oriented_edges(g); rejects pairs that are not oriented
/// edges of g.
int oriented_edge_index(const Graph& g, OrientedEdge e);

/// All non-backtracking arcs, grouped by tail in canonical order. The count
/// always equals sum_v deg(v)*(deg(v)-1).
std::vector<NBArc> nb_arcs(const Graph& g);

/// One weak component of the non-backtracking arc relation. Relative class
/// values propagate from the root (smallest member): +1 along an arc, -1
/// against it, then shift so the smallest attained value is 0. disc_gcd is
/// the gcd of |rel(head)-rel(tail)-1| over the component's arcs; every
/// closed-walk value sum is a multiple of it, and 0 means the relation is
/// exact (no cycles constrain the component).
struct ConstraintComponent {
    std::vector<int> members;           // oriented-edge ids, ascending; members[0] is the root
    std::vector<std::int64_t> rel_value;  // aligned with members; minimum is 0
    std::vector<std::int64_t> value_set;  // sorted distinct rel values
    std::int64_t disc_gcd = 0;
};

std::vector<ConstraintComponent> constraint_components(const Graph& g);

/// A circular k-partition of the oriented edges: class_of[i] is the class of
/// oriented_edges(g)[i], every class 0..k-1 is non-empty, and every
/// non-backtracking arc steps the class by +1 mod k.
struct CircularPartition {
    int k = 0;
    std::vector<int> class_of;
};

/// Feasibility test and constructive witness. A partition exists iff every
/// component's disc_gcd is a multiple of k and per-component shifts can make
/// the attained residues cover all of Z_k; the returned witness uses the
/// lexicographically smallest feasible shift vector. Rejects k == 0.
std::optional<CircularPartition> is_circularly_k_partite(const Graph& g, int k);

/// Largest k for which the graph is circularly k-partite. Searches
/// downward from 2m, which the path graph attains.
int chi_o(const Graph& g);

/// All k in 1..2m admitting a circular k-partition.
std::vector<int> feasible_k_set(const Graph& g);

struct PartitionViolation {
    enum class Kind { arc, empty_class };
    Kind kind;
    NBArc arc{};             // kind == arc: the arc whose classes do not step by +1
    int missing_class = -1;  // kind == empty_class

    std::string describe() const;
};

/// Checks both partition invariants. Rejects maps that are not total over
/// the oriented edges or use classes outside 0..k-1.
std::vector<PartitionViolation> verify_partition(const Graph& g, const CircularPartition& p);

}  // namespace percolour
