#include "percolour/properties.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "percolour/classic.hpp"
#include "percolour/oracles.hpp"
#include "percolour/oriented.hpp"
#include "percolour/vertex_periodic.hpp"

namespace percolour {

namespace {

using Status = PredicateResult::Status;

PredicateResult pass(std::string detail = "") { return {Status::pass, std::move(detail)}; }
PredicateResult fail(std::string detail) { return {Status::fail, std::move(detail)}; }
PredicateResult skip(std::string detail) { return {Status::skip, std::move(detail)}; }

std::vector<int> divisors(int x) {
    std::vector<int> out;
    for (int d = 1; d <= x; ++d)
        if (x % d == 0) out.push_back(d);
    return out;
}

// Rough bound on the simple-path search tree; keeps per-t enumeration cheap.
bool path_cost_ok(const Graph& g, int t) {
    double est = g.vertex_count();
    for (int i = 1; i < t; ++i) {
        est *= std::max(1, g.max_degree() - 1);
        if (est > 2e6) return false;
    }
    return true;
}

bool is_star_like(GraphKind k) { return k == GraphKind::star || k == GraphKind::extended_star; }

std::string show_t(int t) { return "t=" + std::to_string(t); }

PredicateResult check_nb_arc_count(const CorpusEntry& e) {
    const Graph& g = e.graph;
    long long expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        expected += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1);
    auto arcs = nb_arcs(g);
    if (static_cast<long long>(arcs.size()) != expected)
        return fail("arc count " + std::to_string(arcs.size()) + " != " + std::to_string(expected));
    return pass();
}

PredicateResult check_partition_roundtrip(const CorpusEntry& e) {
    const Graph& g = e.graph;
    for (int k : feasible_k_set(g)) {
        auto p = is_circularly_k_partite(g, k);
        if (!p) return fail("k=" + std::to_string(k) + " feasible but no witness");
        auto violations = verify_partition(g, *p);
        if (!violations.empty())
            return fail("k=" + std::to_string(k) + " witness rejected: " + violations.front().describe());
    }
    return pass();
}

PredicateResult check_cycle_branch_divisibility(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.vertex_count() > 12) return skip("enumeration capped at 12 vertices");
    const auto feasible = feasible_k_set(g);
    const auto lens = cycle_lengths(g);
    const auto branches = branch_vertices(g);
    for (int k : feasible) {
        for (int len : lens)
            if (len % k != 0)
                return fail("k=" + std::to_string(k) + " does not divide cycle length " + std::to_string(len));
        for (size_t i = 0; i < branches.size(); ++i)
            for (size_t j = i + 1; j < branches.size(); ++j) {
                int d = distance(g, branches[i], branches[j]);
                if ((2 * d) % k != 0)
                    return fail("k=" + std::to_string(k) + " does not divide 2*d(" +
                                std::to_string(branches[i]) + "," + std::to_string(branches[j]) +
                                ")=" + std::to_string(2 * d));
            }
    }
    return pass();
}

PredicateResult check_feasible_equals_divisors(const CorpusEntry& e) {
    const Graph& g = e.graph;
    GraphKind kind = classify(g).kind;
    if (kind == GraphKind::path || is_star_like(kind)) return skip("path or extended star");
    const auto feasible = feasible_k_set(g);
    const auto expect = divisors(chi_o(g));
    if (feasible != expect) {
        std::ostringstream msg;
        msg << "feasible set {";
        for (int k : feasible) msg << k << ' ';
        msg << "} != divisors of " << chi_o(g);
        return fail(msg.str());
    }
    return pass();
}

PredicateResult check_coprime_cycles(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.vertex_count() > 12) return skip("enumeration capped at 12 vertices");
    const auto lens = cycle_lengths(g);
    for (size_t i = 0; i < lens.size(); ++i)
        for (size_t j = i + 1; j < lens.size(); ++j)
            if (std::gcd(lens[i], lens[j]) == 1) {
                int x = chi_o(g);
                if (x != 1)
                    return fail("cycles of coprime lengths " + std::to_string(lens[i]) + "," +
                                std::to_string(lens[j]) + " but chi_o=" + std::to_string(x));
                return pass();
            }
    return skip("no coprime cycle pair");
}

PredicateResult check_regular_bound(const CorpusEntry& e) {
    const Graph& g = e.graph;
    int d = g.min_degree();
    if (d < 3 || d != g.max_degree()) return skip("not d-regular with d >= 3");
    int x = chi_o(g);
    bool bip = is_bipartite(g).bipartite();
    if (x != 1 && x != 2) return fail("chi_o=" + std::to_string(x) + " outside {1,2}");
    if ((x == 2) != bip) return fail("chi_o=2 and bipartiteness disagree");
    return pass();
}

PredicateResult check_chi_parity(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (is_star_like(classify(g).kind)) return skip("extended star");
    if (g.vertex_count() > kChiVertexCap) return skip("chi cap exceeded");
    int xo = chi_o(g);
    int x = chi(g);
    if ((xo % 2 == 0) != (x == 2))
        return fail("chi_o=" + std::to_string(xo) + " but chi=" + std::to_string(x));
    if (xo % 2 == 1 && xo > 1 && x != 3)
        return fail("chi_o=" + std::to_string(xo) + " odd > 1 but chi=" + std::to_string(x));
    return pass();
}

PredicateResult check_class_one(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.edge_count() > kChiStarEdgeCap) return skip("chi_star cap exceeded");
    // Odd cycles are class two yet have chi_o = N > 1: the implication needs
    // bipartiteness or max degree >= 3.
    if (!is_bipartite(g).bipartite() && g.max_degree() < 3)
        return skip("odd cycle: class two with chi_o > 1");
    if (chi_o(g) <= 1) return pass("chi_o=1, nothing to check");
    int xs = chi_star(g);
    if (xs != g.max_degree())
        return fail("chi_o>1 but chi_star=" + std::to_string(xs) + " != delta=" +
                    std::to_string(g.max_degree()));
    return pass();
}

PredicateResult check_vizing_range(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.edge_count() > kChiStarEdgeCap) return skip("chi_star cap exceeded");
    int xs = chi_star(g);
    int d = g.max_degree();
    if (xs != d && xs != d + 1)
        return fail("chi_star=" + std::to_string(xs) + " outside {" + std::to_string(d) + "," +
                    std::to_string(d + 1) + "}");
    return pass();
}

PredicateResult check_periodic_bounds(const CorpusEntry& e) {
    const Graph& g = e.graph;
    bool applied = false;
    for (int t = 1; t <= std::min(g.vertex_count() - 1, 8); ++t) {
        if (!path_cost_ok(g, t)) break;
        auto r = chi_t(g, t);
        if (!r.unconstrained.empty()) continue;  // the bound presumes every vertex is an endpoint
        applied = true;
        if (r.k < 1 || r.k > t)
            return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " outside 1..t");
    }
    return applied ? pass() : skip("no t with every vertex constrained");
}

PredicateResult check_bipartite_iff_two_periodic(const CorpusEntry& e) {
    const Graph& g = e.graph;
    auto r = chi_t(g, 2);
    bool bip = is_bipartite(g).bipartite();
    if ((r.k == 2) != bip)
        return fail("chi_2=" + std::to_string(r.k) + " but bipartite=" + (bip ? "yes" : "no"));
    return pass();
}

PredicateResult check_cycle_gcd(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (classify(g).kind != GraphKind::cycle) return skip("not a cycle");
    const int n = g.vertex_count();
    for (int t = 1; t <= n - 1; ++t) {
        auto r = chi_t(g, t);
        if (r.k != std::gcd(t, n))
            return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " != gcd=" +
                        std::to_string(std::gcd(t, n)));
    }
    return pass();
}

PredicateResult check_subcycle_gcd_bound(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.vertex_count() > 12) return skip("enumeration capped at 12 vertices");
    const auto lens = cycle_lengths(g);
    if (lens.empty()) return skip("acyclic");
    bool applied = false;
    for (int t = 1; t <= std::min(g.vertex_count(), 8); ++t) {
        if (!path_cost_ok(g, t)) break;
        auto r = chi_t(g, t);
        if (!r.unconstrained.empty()) continue;
        for (int len : lens) {
            if (t > len) continue;
            applied = true;
            if (r.k > std::gcd(t, len))
                return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " > gcd(t," +
                            std::to_string(len) + ")");
        }
    }
    return applied ? pass() : skip("no qualifying t");
}

bool qualifies_for_tau(const Graph& g, std::optional<int>& gr) {
    if (g.min_degree() < 2) return false;
    if (classify(g).kind == GraphKind::cycle) return false;
    gr = girth(g);
    return gr && *gr >= 3;
}

PredicateResult check_palindromic_bound(const CorpusEntry& e) {
    const Graph& g = e.graph;
    std::optional<int> gr;
    if (!qualifies_for_tau(g, gr)) return skip("needs min degree >= 2, non-cycle");
    bool applied = false;
    for (int t = 3; t <= std::min(*gr, g.vertex_count() - 1); ++t) {
        if (!path_cost_ok(g, t)) break;
        applied = true;
        auto r = chi_t(g, t);
        int tau = t / 2;
        if (r.k > tau + 1)
            return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " > tau+1=" +
                        std::to_string(tau + 1));
        if (g.vertex_count() <= 16) {
            auto c = build_t_periodic_colouring(g, t);
            auto shape = tau_shape(g, t, c);
            if (shape && !shape->pattern_holds)
                return fail(show_t(t) + ": palindromic identities fail on the witness");
            if (shape && shape->distinct_slots > tau + 1)
                return fail(show_t(t) + ": " + std::to_string(shape->distinct_slots) + " slots");
        }
    }
    return applied ? pass() : skip("no qualifying t");
}

PredicateResult check_palindromic_equality(const CorpusEntry& e) {
    const Graph& g = e.graph;
    std::optional<int> gr;
    if (!qualifies_for_tau(g, gr)) return skip("needs min degree >= 2, non-cycle");
    const auto feasible = feasible_k_set(g);
    bool applied = false;
    for (int t = 3; t <= std::min(*gr, g.vertex_count() - 1); ++t) {
        if (!path_cost_ok(g, t)) break;
        applied = true;
        auto r = chi_t(g, t);
        bool equal = r.k == t / 2 + 1;
        bool partite = std::binary_search(feasible.begin(), feasible.end(), t);
        if (equal != partite)
            return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " vs circularly " +
                        std::to_string(t) + "-partite=" + (partite ? "yes" : "no"));
    }
    return applied ? pass() : skip("no qualifying t");
}

PredicateResult check_cycle_periodic_equality(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (classify(g).kind != GraphKind::cycle) return skip("not a cycle");
    const int n = g.vertex_count();
    const auto feasible = feasible_k_set(g);
    for (int t = 1; t <= n; ++t) {
        auto r = chi_t(g, t);
        bool partite = std::binary_search(feasible.begin(), feasible.end(), t);
        if ((r.k == t) != partite)
            return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " vs circularly " +
                        std::to_string(t) + "-partite=" + (partite ? "yes" : "no"));
    }
    return pass();
}

PredicateResult check_dense_two_colours(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (2 * g.edge_count() < 4 * g.vertex_count()) return skip("average degree < 4");
    bool applied = false;
    for (int t = 1; t <= g.vertex_count() - 1; ++t) {
        if (!path_cost_ok(g, t)) break;
        auto r = chi_t(g, t);
        if (!r.unconstrained.empty()) continue;
        applied = true;
        if (r.k > 2) return fail(show_t(t) + ": chi_t=" + std::to_string(r.k) + " > 2");
    }
    return applied ? pass() : skip("no qualifying t");
}

PredicateResult check_oracle_circular(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.edge_count() > kOracleEdgeCap) return skip("oracle cap exceeded");
    int fast = chi_o(g), slow = oracle_chi_o(g);
    if (fast != slow)
        return fail("chi_o=" + std::to_string(fast) + " but oracle=" + std::to_string(slow));
    return pass();
}

PredicateResult check_oracle_periodic(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.vertex_count() > kOracleVertexCap) return skip("oracle cap exceeded");
    for (int t = 1; t <= g.vertex_count(); ++t) {
        int fast = chi_t(g, t).k, slow = oracle_chi_t(g, t);
        if (fast != slow)
            return fail(show_t(t) + ": chi_t=" + std::to_string(fast) + " but oracle=" +
                        std::to_string(slow));
    }
    return pass();
}

PredicateResult check_classify_declared(const CorpusEntry& e) {
    if (!e.declared_kind) return skip("no declared kind");
    GraphKind got = classify(e.graph).kind;
    if (got != *e.declared_kind)
        return fail(std::string("classified as ") + to_string(got) + ", declared " +
                    to_string(*e.declared_kind));
    return pass();
}

PredicateResult check_family_values(const CorpusEntry& e) {
    const Graph& g = e.graph;
    const auto& exp = e.expected;
    if (!exp.chi_o && !exp.chi && !exp.chi_t_formula) return skip("no expected values");
    if (exp.chi_o) {
        int x = chi_o(g);
        if (x != *exp.chi_o)
            return fail("chi_o=" + std::to_string(x) + ", expected " + std::to_string(*exp.chi_o));
    }
    if (exp.chi && g.vertex_count() <= kChiVertexCap) {
        int x = chi(g);
        if (x != *exp.chi)
            return fail("chi=" + std::to_string(x) + ", expected " + std::to_string(*exp.chi));
    }
    if (exp.chi_t_formula) {
        for (int t = 1; t <= std::min(g.vertex_count() - 1, 6); ++t) {
            if (!path_cost_ok(g, t)) break;
            int k = chi_t(g, t).k;
            if (k != *exp.chi_t(t))
                return fail(show_t(t) + ": chi_t=" + std::to_string(k) + ", expected " +
                            std::to_string(*exp.chi_t(t)));
        }
    }
    return pass();
}

PredicateResult check_periodic_maximality(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.vertex_count() > 8) return skip("capped at 8 vertices");
    bool applied = false;
    for (int t = 2; t <= std::min(4, g.vertex_count() - 1); ++t) {
        applied = true;
        auto c = build_t_periodic_colouring(g, t);
        if (!verify_t_periodic(g, t, c).empty()) return fail(show_t(t) + ": built colouring invalid");

        // Coarsening stays valid.
        for (int a = 0; a < c.k; ++a)
            for (int b = a + 1; b < c.k; ++b) {
                VertexColouring merged = c;
                for (int& col : merged.colour_of)
                    if (col == b) col = a;
                if (!verify_t_periodic(g, t, merged).empty())
                    return fail(show_t(t) + ": merging classes " + std::to_string(a) + "," +
                                std::to_string(b) + " broke validity");
            }

        // Splitting any class of size >= 2 must violate.
        for (int cls = 0; cls < c.k; ++cls) {
            int last = -1, count = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (c.colour_of[static_cast<size_t>(v)] == cls) {
                    last = v;
                    ++count;
                }
            if (count < 2) continue;
            VertexColouring split = c;
            split.colour_of[static_cast<size_t>(last)] = c.k;
            split.k = c.k + 1;
            if (verify_t_periodic(g, t, split).empty())
                return fail(show_t(t) + ": splitting class " + std::to_string(cls) +
                            " stayed valid, chi_t not maximal");
        }
    }
    return applied ? pass() : skip("graph too small");
}

PredicateResult check_metric_axioms(const CorpusEntry& e) {
    const Graph& g = e.graph;
    const int n = g.vertex_count();
    if (n > 12) return skip("capped at 12 vertices");
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (distance(g, u, v) != distance(g, v, u)) return fail("asymmetric distance");
            for (int w = 0; w < n; ++w)
                if (distance(g, u, w) > distance(g, u, v) + distance(g, v, w))
                    return fail("triangle inequality fails");
        }
    return pass();
}

PredicateResult check_bipartite_consistency(const CorpusEntry& e) {
    const Graph& g = e.graph;
    if (g.vertex_count() > 12) return skip("enumeration capped at 12 vertices");
    auto bc = is_bipartite(g);
    bool odd_cycle = false;
    for (int len : cycle_lengths(g))
        if (len % 2 == 1) odd_cycle = true;
    if (bc.bipartite() == odd_cycle) return fail("bipartiteness vs odd-cycle existence disagree");
    if (bc.bipartite()) {
        std::vector<char> side(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : bc.partition->side1) side[static_cast<size_t>(v)] = 1;
        for (auto [u, v] : g.edges())
            if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)])
                return fail("edge inside one side of the bipartition");
    } else {
        const auto& walk = bc.odd_closed_walk;
        if (walk.size() < 4 || walk.front() != walk.back() || walk.size() % 2 != 0)
            return fail("odd-walk witness malformed");
        for (size_t i = 0; i + 1 < walk.size(); ++i)
            if (!g.has_edge(walk[i], walk[i + 1])) return fail("odd-walk witness not a walk");
    }
    return pass();
}

}  // namespace

const std::vector<TheoremPredicate>& theorem_predicates() {
    static const std::vector<TheoremPredicate> suite = {
        {"nb_arc_count", check_nb_arc_count},
        {"partition_roundtrip", check_partition_roundtrip},
        {"cycle_branch_divisibility", check_cycle_branch_divisibility},
        {"feasible_equals_divisors", check_feasible_equals_divisors},
        {"coprime_cycles_force_one", check_coprime_cycles},
        {"regular_chi_o_bound", check_regular_bound},
        {"chi_parity", check_chi_parity},
        {"class_one", check_class_one},
        {"vizing_range", check_vizing_range},
        {"periodic_upper_bounds", check_periodic_bounds},
        {"bipartite_iff_two_periodic", check_bipartite_iff_two_periodic},
        {"cycle_gcd", check_cycle_gcd},
        {"subcycle_gcd_bound", check_subcycle_gcd_bound},
        {"palindromic_bound", check_palindromic_bound},
        {"palindromic_equality", check_palindromic_equality},
        {"cycle_periodic_equality", check_cycle_periodic_equality},
        {"dense_two_colour_bound", check_dense_two_colours},
        {"oracle_circular", check_oracle_circular},
        {"oracle_periodic", check_oracle_periodic},
        {"classify_declared", check_classify_declared},
        {"family_expected_values", check_family_values},
        {"periodic_maximality", check_periodic_maximality},
        {"metric_axioms", check_metric_axioms},
        {"bipartite_consistency", check_bipartite_consistency},
    };
    return suite;
}

}  // namespace percolour
