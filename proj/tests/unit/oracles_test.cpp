#include "percolour/oracles.hpp"

#include "doctest.h"
#include "percolour/families.hpp"
#include "percolour/oriented.hpp"
#include "percolour/vertex_periodic.hpp"

using namespace percolour;

namespace {

Graph fam(const std::string& shorthand) { return generate(parse_family(shorthand)).graph; }

}  // namespace

TEST_CASE("oracle_chi_o closed forms") {
    CHECK(oracle_chi_o(fam("path:2")) == 4);
    CHECK(oracle_chi_o(fam("cycle:6")) == 6);
    CHECK(oracle_chi_o(fam("star:3")) == 2);
    CHECK(oracle_chi_o(fam("complete:4")) == 1);
    CHECK(oracle_chi_o(fam("petal:2x3")) == 3);
    CHECK(oracle_chi_o(fam("extstar:2,2,1")) == 4);
    CHECK(oracle_chi_o(fam("extstar:2,1,1")) == 4);
    CHECK(oracle_chi_o(fam("extstar:3,2,1")) == 6);
    CHECK_THROWS_AS(oracle_chi_o(fam("path:11")), CapError);
}

TEST_CASE("oracle_chi_t closed forms") {
    CHECK(oracle_chi_t(fam("cycle:6"), 4) == 2);
    CHECK(oracle_chi_t(fam("cycle:5"), 5) == 5);  // t == n: no open path constrains anything
    CHECK(oracle_chi_t(fam("complete:4"), 3) == 1);
    CHECK(oracle_chi_t(fam("path:4"), 3) == 3);
    CHECK_THROWS_AS(oracle_chi_t(fam("cycle:9"), 2), CapError);
    CHECK_THROWS_AS(oracle_chi_t(fam("cycle:5"), 6), InputError);
}

TEST_CASE("oracles agree with the main algorithms on a mixed sample") {
    std::vector<std::string> names = {"path:1",  "path:3",   "path:5",    "cycle:3",  "cycle:6",
                                      "cycle:8", "star:3",   "star:4",    "extstar:2,2,1",
                                      "petal:1x3", "petal:2x3", "complete:4", "fig4:1", "fig4:2"};
    for (unsigned seed = 0; seed < 16; ++seed)
        names.push_back("random:6,8," + std::to_string(seed));

    for (const auto& name : names) {
        Graph g = fam(name);
        if (g.edge_count() <= kOracleEdgeCap)
            CHECK_MESSAGE(chi_o(g) == oracle_chi_o(g), name);
        if (g.vertex_count() <= kOracleVertexCap)
            for (int t = 1; t <= g.vertex_count(); ++t)
                CHECK_MESSAGE(chi_t(g, t).k == oracle_chi_t(g, t), name << " t=" << t);
    }
}
