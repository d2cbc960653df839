#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "percolour/graph.hpp"

namespace percolour {

/// Endpoint relation induced by simple paths of exactly t edges. Paths are
/// simple (distinct vertices); closed t-cycles constrain nothing and are
/// surfaced separately via self_constrained.
struct PathRelation {
    int t = 0;
    std::vector<std::pair<int, int>> pairs;  // u < v, sorted, deduplicated
    std::vector<int> constrained;            // vertices appearing in >= 1 pair
    std::vector<int> self_constrained;       // vertices on a closed cycle of length t
};

/// Depth-first enumeration with visited-set pruning. Accepts 1 <= t <= n;
/// at t == n the relation is empty by construction (a simple path of n
/// edges would need n+1 distinct vertices).
PathRelation path_relation(const Graph& g, int t);

struct ChiT {
    int k = 0;                       // classes of the closure of the endpoint relation
    std::vector<int> unconstrained;  // vertices in no pair; each is its own class
};

/// Number of equivalence classes of the reflexive-transitive closure of the
/// endpoint relation over all of V, via union-find. Vertices untouched by
/// any length-t path form singleton classes and are reported so callers can
/// restrict t.
ChiT chi_t(const Graph& g, int t);

struct VertexColouring {
    int t = 0;
    int k = 0;
    std::vector<int> colour_of;  // vertex -> colour in 0..k-1, classes numbered by smallest member
};

/// Canonical maximal t-periodic colouring: one colour per closure class.
VertexColouring build_t_periodic_colouring(const Graph& g, int t);

struct PathViolation {
    std::vector<int> path;  // t+1 vertices; endpoints have different colours
};

/// Empty iff the colouring is t-periodic. One witness path is reported per
/// violating endpoint pair. Rejects colourings that are not total on V.
std::vector<PathViolation> verify_t_periodic(const Graph& g, int t, const VertexColouring& c);

/// Palindromic decomposition of a t-periodic colouring along a witness made
/// of a cycle plus a pendant path of length floor(t/2) attached at one
/// cycle vertex. slots holds the colours c_0..c_tau read off the witness;
/// a valid colouring can use at most tau+1 distinct ones.
struct TauShape {
    int tau = 0;
    std::vector<int> slots;    // c_0 .. c_tau
    std::vector<int> pattern;  // the length-t period: c_0,c_1,..,c_tau,(c_tau,)..,c_1
    int distinct_slots = 0;
    bool attains_bound = false;  // distinct_slots == tau+1
    bool pattern_holds = false;  // the defining identities hold on the witness
    std::vector<int> cycle;      // witness cycle v_0..v_{l-1}
    std::vector<int> pendant;    // w_1..w_tau, disjoint from the cycle
};

/// Requires min degree >= 2, a non-cycle graph and 3 <= t <= girth; rejects
/// otherwise, naming the failed condition. Returns nullopt when no witness
/// subgraph exists.
std::optional<TauShape> tau_shape(const Graph& g, int t, const VertexColouring& c);

}  // namespace percolour
