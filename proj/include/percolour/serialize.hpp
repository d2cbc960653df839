#pragma once

#include <optional>
#include <string>

#include "percolour/graph.hpp"
#include "percolour/oriented.hpp"
#include "percolour/vertex_periodic.hpp"

namespace percolour {

/// {"k": K, "entries": [[v, w, class], ...]} in canonical oriented-edge order.
std::string partition_to_json(const Graph& g, const CircularPartition& p);

/// Rejects entries that do not match the graph's oriented edges exactly.
CircularPartition partition_from_json(const Graph& g, const std::string& text);

/// {"t": T, "k": K, "colours": [c0, ..., c_{n-1}]}
std::string colouring_to_json(const VertexColouring& c);

VertexColouring colouring_from_json(const Graph& g, const std::string& text);

/// A witness file holds either a circular partition or a vertex colouring;
/// the object's fields decide which.
struct Witness {
    std::optional<CircularPartition> partition;
    std::optional<VertexColouring> colouring;
};

Witness witness_from_json(const Graph& g, const std::string& text);

/// Graphviz output. A vertex colouring fills the nodes; a circular partition
/// labels both orientations of each edge with their classes.
std::string to_dot(const Graph& g, const std::optional<VertexColouring>& colouring,
                   const std::optional<CircularPartition>& partition);

}  // namespace percolour
