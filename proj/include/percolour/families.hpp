#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "percolour/graph.hpp"

namespace percolour {

enum class Family {
    path,           // params: {M}, M >= 1 edges
    cycle,          // params: {N}, N >= 3
    star,           // params: {n}, n >= 3 leaves
    extended_star,  // params: arm lengths, >= 3 arms
    complete,       // params: {N}, N >= 2
    petal,          // params: {l, k}: l >= 1 petals of length k >= 3
    mickey_mouse,   // params: {k}, k >= 2: face 5k, ears 2k, attachments at distance k
    random_connected,  // params: {n, m}; uniform spanning tree plus uniform extra edges
    subdivided,     // params: {1|2}: the two fixture graphs differing by one edge subdivision
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
    unsigned seed = 0;  // random_connected only
};

/// Closed-form tags for chi_t where a formula is known for the family.
enum class ChiTFormula { gcd_t_n, t_itself, one };

struct ExpectedValues {
    std::optional<int> chi_o;
    std::optional<ChiTFormula> chi_t_formula;
    int formula_n = 0;  // the N in gcd(t, N)
    std::optional<int> chi;

    std::optional<int> chi_t(int t) const;
};

struct FamilyInstance {
    Graph graph;
    ExpectedValues expected;
    std::string name;  // canonical shorthand, e.g. "petal:3x4"
};

/// Deterministic generator; rejects out-of-range parameters naming the
/// violated constraint.
FamilyInstance generate(const FamilySpec& spec);

/// Parses CLI shorthand: path:M, cycle:N, star:N, extstar:a,b,c,...,
/// complete:N, petal:LxK, mickey:K, random:N,M,SEED, fig4:1, fig4:2.
FamilySpec parse_family(std::string_view shorthand);

/// True when the string looks like family shorthand rather than a file path.
bool looks_like_family(std::string_view input);

/// Replaces edge {u,v} by a path of times+1 edges through fresh vertices.
Graph subdivide(const Graph& g, int u, int v, int times);

}  // namespace percolour
