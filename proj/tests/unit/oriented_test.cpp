#include "percolour/oriented.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "percolour/families.hpp"

using namespace percolour;

namespace {

// Independent arc oracle: filter all ordered pairs of oriented edges.
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> brute_arcs(const Graph& g) {
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
    auto edges = oriented_edges(g);
    for (const auto& a : edges)
        for (const auto& b : edges)
            if (a.output == b.input && a.input != b.output)
                out.insert({{a.input, a.output}, {b.input, b.output}});
    return out;
}

Graph fam(const std::string& shorthand) { return generate(parse_family(shorthand)).graph; }

}  // namespace

TEST_CASE("oriented_edges: both orientations in lexicographic order") {
    Graph k2 = parse_edge_list("0 1");
    auto edges = oriented_edges(k2);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == OrientedEdge{0, 1});
    CHECK(edges[1] == OrientedEdge{1, 0});

    CHECK(oriented_edges(fam("cycle:3")).size() == 6);
    auto p3 = oriented_edges(fam("path:3"));
    CHECK(p3.size() == 6);
    CHECK(std::is_sorted(p3.begin(), p3.end()));
    for (size_t i = 0; i < p3.size(); ++i)
        CHECK(oriented_edge_index(fam("path:3"), p3[i]) == static_cast<int>(i));
    CHECK_THROWS_AS(oriented_edge_index(k2, OrientedEdge{0, 0}), InputError);
}

TEST_CASE("nb_arcs matches the brute filter and the degree identity") {
    CHECK(nb_arcs(parse_edge_list("0 1")).empty());

    for (const char* name : {"cycle:3", "star:3", "path:4", "petal:2x3", "complete:4", "fig4:1"}) {
        Graph g = fam(name);
        auto arcs = nb_arcs(g);
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> got;
        for (const auto& a : arcs)
            got.insert({{a.tail.input, a.tail.output}, {a.head.input, a.head.output}});
        CHECK(got == brute_arcs(g));
        CHECK(got.size() == arcs.size());

        long long expected = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            expected += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1);
        CHECK(static_cast<long long>(arcs.size()) == expected);
    }

    CHECK(nb_arcs(fam("cycle:3")).size() == 6);
    CHECK(nb_arcs(fam("star:3")).size() == 6);
}

TEST_CASE("constraint_components on paths") {
    for (int len : {1, 2, 3, 4, 5}) {
        Graph g = fam("path:" + std::to_string(len));
        auto comps = constraint_components(g);
        REQUIRE(comps.size() == 2);
        for (const auto& c : comps) {
            CHECK(static_cast<int>(c.members.size()) == len);
            CHECK(c.disc_gcd == 0);
            std::vector<std::int64_t> want(static_cast<size_t>(len));
            std::iota(want.begin(), want.end(), c.value_set.front());
            CHECK(c.value_set == want);  // consecutive range of width M
            CHECK(c.value_set.back() - c.value_set.front() == len - 1);
        }
    }
}

TEST_CASE("constraint_components on cycles and stars") {
    for (int n : {3, 4, 5, 6, 8}) {
        auto comps = constraint_components(fam("cycle:" + std::to_string(n)));
        REQUIRE(comps.size() == 2);
        for (const auto& c : comps) {
            CHECK(static_cast<int>(c.members.size()) == n);
            CHECK(c.disc_gcd == n);
        }
    }

    auto star = constraint_components(fam("star:3"));
    REQUIRE(star.size() == 1);
    CHECK(star[0].members.size() == 6);
    CHECK(star[0].disc_gcd == 0);
    CHECK(star[0].value_set == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("component values satisfy the arc discrepancy identity") {
    // across every arc, rel(head) - rel(tail) - 1 is a multiple of the
    // component's disc_gcd (equal to 0 when the gcd is 0)
    std::vector<std::string> names = {"path:4", "cycle:5", "cycle:6", "star:4", "extstar:3,2,1",
                                      "petal:2x4", "complete:5", "fig4:1", "fig4:2", "mickey:2"};
    for (unsigned seed = 0; seed < 10; ++seed) names.push_back("random:7,9," + std::to_string(seed));

    for (const auto& name : names) {
        Graph g = fam(name);
        auto comps = constraint_components(g);
        std::vector<int> comp_of(oriented_edges(g).size(), -1);
        std::vector<std::int64_t> rel(oriented_edges(g).size(), 0);
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (size_t j = 0; j < comps[ci].members.size(); ++j) {
                comp_of[static_cast<size_t>(comps[ci].members[j])] = static_cast<int>(ci);
                rel[static_cast<size_t>(comps[ci].members[j])] = comps[ci].rel_value[j];
            }
        for (const auto& arc : nb_arcs(g)) {
            int t = oriented_edge_index(g, arc.tail);
            int h = oriented_edge_index(g, arc.head);
            REQUIRE(comp_of[static_cast<size_t>(t)] == comp_of[static_cast<size_t>(h)]);
            std::int64_t disc = rel[static_cast<size_t>(h)] - rel[static_cast<size_t>(t)] - 1;
            std::int64_t gcd = comps[static_cast<size_t>(comp_of[static_cast<size_t>(t)])].disc_gcd;
            if (gcd == 0)
                CHECK(disc == 0);
            else
                CHECK(disc % gcd == 0);
        }
    }
}

TEST_CASE("is_circularly_k_partite basics") {
    Graph any = fam("petal:2x4");
    auto one = is_circularly_k_partite(any, 1);
    REQUIRE(one.has_value());
    CHECK(one->k == 1);
    CHECK(verify_partition(any, *one).empty());

    Graph c6 = fam("cycle:6");
    auto p = is_circularly_k_partite(c6, 3);
    REQUIRE(p.has_value());
    CHECK(verify_partition(c6, *p).empty());

    CHECK_FALSE(is_circularly_k_partite(fam("cycle:5"), 3).has_value());
    CHECK_THROWS_AS(is_circularly_k_partite(c6, 0), InputError);

    // k classes need k oriented edges
    CHECK_FALSE(is_circularly_k_partite(parse_edge_list("0 1"), 3).has_value());
    auto k2 = is_circularly_k_partite(parse_edge_list("0 1"), 2);
    REQUIRE(k2.has_value());
    CHECK(verify_partition(parse_edge_list("0 1"), *k2).empty());
}

TEST_CASE("chi_o closed forms") {
    for (int m = 1; m <= 6; ++m) CHECK(chi_o(fam("path:" + std::to_string(m))) == 2 * m);
    for (int n = 3; n <= 8; ++n) CHECK(chi_o(fam("cycle:" + std::to_string(n))) == n);
    CHECK(chi_o(fam("star:3")) == 2);
    CHECK(chi_o(fam("star:6")) == 2);
    CHECK(chi_o(fam("extstar:2,2,1")) == 4);
    // twice the longest arm, not the diameter: the longest arm's two
    // orientations chain through the centre
    CHECK(chi_o(fam("extstar:3,2,1")) == 6);
    CHECK(chi_o(fam("extstar:2,1,1")) == 4);
    CHECK(chi_o(fam("complete:4")) == 1);
    CHECK(chi_o(fam("complete:6")) == 1);
    for (int l : {1, 2, 3})
        for (int k : {3, 4, 5})
            CHECK(chi_o(fam("petal:" + std::to_string(l) + "x" + std::to_string(k))) == k);
    CHECK(chi_o(fam("mickey:2")) == 2);
    CHECK(chi_o(fam("mickey:3")) == 3);
}

TEST_CASE("deterministic witness: lexicographically smallest shifts") {
    Graph c6 = fam("cycle:6");
    auto p1 = is_circularly_k_partite(c6, 3);
    auto p2 = is_circularly_k_partite(c6, 3);
    REQUIRE(p1.has_value());
    CHECK(p1->class_of == p2->class_of);
    // frozen from a verified run; oriented edges in lexicographic order
    CHECK(p1->class_of == std::vector<int>{2, 2, 1, 0, 0, 1, 2, 2, 1, 0, 1, 0});
}

TEST_CASE("verify_partition flags every violation kind") {
    Graph c6 = fam("cycle:6");
    CircularPartition zeros{2, std::vector<int>(12, 0)};
    auto violations = verify_partition(c6, zeros);
    int empty_classes = 0, bad_arcs = 0;
    for (const auto& v : violations)
        (v.kind == PartitionViolation::Kind::empty_class ? empty_classes : bad_arcs) += 1;
    CHECK(empty_classes == 1);
    CHECK(bad_arcs == 12);  // every arc violates the successor rule

    auto good = is_circularly_k_partite(c6, 6);
    REQUIRE(good.has_value());
    CircularPartition tampered = *good;
    tampered.class_of[5] = (tampered.class_of[5] + 1) % 6;
    CHECK_FALSE(verify_partition(c6, tampered).empty());

    CircularPartition not_total{3, std::vector<int>(7, 0)};
    CHECK_THROWS_AS(verify_partition(c6, not_total), InputError);
    CircularPartition out_of_range{2, std::vector<int>(12, 2)};
    CHECK_THROWS_AS(verify_partition(c6, out_of_range), InputError);
}

TEST_CASE("feasible_k_set shapes") {
    CHECK(feasible_k_set(fam("path:3")) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(feasible_k_set(fam("extstar:2,2,1")) == std::vector<int>{1, 2, 3, 4});
    CHECK(feasible_k_set(fam("cycle:6")) == std::vector<int>{1, 2, 3, 6});
    CHECK(feasible_k_set(fam("petal:2x4")) == std::vector<int>{1, 2, 4});
}
