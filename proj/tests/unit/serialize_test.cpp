#include "percolour/serialize.hpp"

#include "doctest.h"
#include "json.hpp"
#include "percolour/families.hpp"

using namespace percolour;

TEST_CASE("partition JSON round trip") {
    Graph c6 = generate(parse_family("cycle:6")).graph;
    auto p = is_circularly_k_partite(c6, 3);
    REQUIRE(p.has_value());
    std::string text = partition_to_json(c6, *p);

    auto j = nlohmann::json::parse(text);
    CHECK(j["k"] == 3);
    CHECK(j["entries"].size() == 12);

    CircularPartition back = partition_from_json(c6, text);
    CHECK(back.k == p->k);
    CHECK(back.class_of == p->class_of);
    CHECK(verify_partition(c6, back).empty());
}

TEST_CASE("partition JSON rejects mismatched graphs") {
    Graph c6 = generate(parse_family("cycle:6")).graph;
    Graph c5 = generate(parse_family("cycle:5")).graph;
    auto p = is_circularly_k_partite(c6, 3);
    std::string text = partition_to_json(c6, *p);
    CHECK_THROWS_AS(partition_from_json(c5, text), InputError);
    CHECK_THROWS_AS(partition_from_json(c6, "not json"), InputError);
    CHECK_THROWS_AS(partition_from_json(c6, "{\"k\": 3}"), InputError);
}

TEST_CASE("colouring JSON round trip and dispatch") {
    Graph c6 = generate(parse_family("cycle:6")).graph;
    VertexColouring c = build_t_periodic_colouring(c6, 3);
    std::string text = colouring_to_json(c);

    VertexColouring back = colouring_from_json(c6, text);
    CHECK(back.t == 3);
    CHECK(back.k == 3);
    CHECK(back.colour_of == c.colour_of);

    Witness w = witness_from_json(c6, text);
    CHECK(w.colouring.has_value());
    CHECK_FALSE(w.partition.has_value());

    Witness w2 = witness_from_json(c6, partition_to_json(c6, *is_circularly_k_partite(c6, 2)));
    CHECK(w2.partition.has_value());

    CHECK_THROWS_AS(witness_from_json(c6, "{}"), InputError);
    Graph c5 = generate(parse_family("cycle:5")).graph;
    CHECK_THROWS_AS(colouring_from_json(c5, text), InputError);
}

TEST_CASE("dot output carries structure and annotations") {
    Graph c4 = generate(parse_family("cycle:4")).graph;
    std::string plain = to_dot(c4, std::nullopt, std::nullopt);
    CHECK(plain.find("graph g {") == 0);
    CHECK(plain.find("0 -- 1") != std::string::npos);

    auto p = is_circularly_k_partite(c4, 4);
    auto c = build_t_periodic_colouring(c4, 2);
    std::string both = to_dot(c4, c, p);
    CHECK(both.find("digraph") == 0);
    CHECK(both.find("->") != std::string::npos);
    CHECK(both.find("fillcolor") != std::string::npos);
}
