#pragma once

#include "percolour/graph.hpp"

namespace percolour {

inline constexpr int kOracleEdgeCap = 10;    // oracle_chi_o
inline constexpr int kOracleVertexCap = 8;   // oracle_chi_t

/// Brute-force baseline for chi_o: for k descending from 2m, backtrack over
/// class assignments of the oriented edges in canonical order, checking the
/// successor rule on every non-backtracking arc and non-emptiness at
/// completion. Independent of the component/cover method. Rejects m > 10.
int oracle_chi_o(const Graph& g);

/// Brute-force baseline for chi_t: enumerates vertex set partitions as
/// restricted growth strings and checks each against all length-t endpoint
/// pairs, which are precomputed by enumerating walks and discarding those
/// with repeated vertices. Accepts 1 <= t <= n; rejects n > 8.
int oracle_chi_t(const Graph& g, int t);

}  // namespace percolour
