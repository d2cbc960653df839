#pragma once

#include "percolour/graph.hpp"

namespace percolour {

inline constexpr int kChiVertexCap = 16;  // chi() is exact-only
inline constexpr int kChiStarEdgeCap = 24;

enum class VizingClass { one, two };

struct ChromaResult {
    int chi = 0;
    int chi_star = 0;
    int delta = 0;
    VizingClass vizing_class = VizingClass::one;
};

/// Exact vertex chromatic number by branch and bound (greedy clique lower
/// bound, greedy colouring upper bound). Rejects n > 16.
int chi(const Graph& g);

/// Exact edge chromatic number via vertex colouring of the line graph.
/// Always Delta or Delta+1. Rejects m > 24.
int chi_star(const Graph& g);

ChromaResult chroma(const Graph& g);

const char* to_string(VizingClass c);

}  // namespace percolour
