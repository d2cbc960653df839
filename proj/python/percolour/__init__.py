"""Exact periodic colouring numbers of simple connected graphs.

Thin wrapper around the C++ core. The two headline quantities:

* ``chi_o(g)``  — oriented-edge periodic colouring number: the largest k for
  which the oriented edges split into k cyclically ordered non-empty classes
  where every non-backtracking step advances the class by one.
* ``chi_t(g, t)`` — vertex t-periodic colouring number: the largest number of
  colours such that every simple path of exactly t edges has same-coloured
  endpoints.
"""

from percolour._core import (
    CapError,
    Graph,
    InputError,
    analyze_json,
    branch_vertices,
    build_t_periodic_colouring,
    canonical_edge_text,
    chi,
    chi_o,
    chi_star,
    chi_t,
    chroma,
    classify,
    distance,
    feasible_k_set,
    generate,
    girth,
    is_bipartite,
    is_circularly_k_partite,
    nb_arc_count,
    oracle_chi_o,
    oracle_chi_t,
    oriented_edges,
    parse_edge_list,
    subdivide,
    survey_json,
    verify_partition,
    verify_t_periodic,
)

__all__ = [
    "CapError",
    "Graph",
    "InputError",
    "analyze_json",
    "branch_vertices",
    "build_t_periodic_colouring",
    "canonical_edge_text",
    "chi",
    "chi_o",
    "chi_star",
    "chi_t",
    "chroma",
    "classify",
    "distance",
    "feasible_k_set",
    "generate",
    "girth",
    "is_bipartite",
    "is_circularly_k_partite",
    "nb_arc_count",
    "oracle_chi_o",
    "oracle_chi_t",
    "oriented_edges",
    "parse_edge_list",
    "subdivide",
    "survey_json",
    "verify_partition",
    "verify_t_periodic",
]
