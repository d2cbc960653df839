#include "percolour/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace percolour {

namespace {

nlohmann::json parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("witness is not valid JSON");
    return j;
}

}  // namespace

std::string partition_to_json(const Graph& g, const CircularPartition& p) {
    nlohmann::json entries = nlohmann::json::array();
    const auto edges = oriented_edges(g);
    if (p.class_of.size() != edges.size()) throw InputError("partition does not match the graph");
    for (size_t i = 0; i < edges.size(); ++i)
        entries.push_back({edges[i].input, edges[i].output, p.class_of[i]});
    nlohmann::json j{{"k", p.k}, {"entries", std::move(entries)}};
    return j.dump();
}

CircularPartition partition_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("k") || !j.contains("entries"))
        throw InputError("partition witness needs fields \"k\" and \"entries\"");
    CircularPartition p;
    p.k = j["k"].get<int>();
    const auto& entries = j["entries"];
    const int ne = 2 * g.edge_count();
    if (!entries.is_array() || static_cast<int>(entries.size()) != ne)
        throw InputError("witness does not match the graph: expected " + std::to_string(ne) +
                         " oriented-edge entries, got " + std::to_string(entries.size()));
    p.class_of.assign(static_cast<size_t>(ne), -1);
    for (const auto& entry : entries) {
        if (!entry.is_array() || entry.size() != 3)
            throw InputError("each entry must be [input, output, class]");
        OrientedEdge e{entry[0].get<int>(), entry[1].get<int>()};
        int idx = oriented_edge_index(g, e);  // rejects non-edges
        if (p.class_of[static_cast<size_t>(idx)] != -1)
            throw InputError("duplicate entry for oriented edge [" + std::to_string(e.input) + "," +
                             std::to_string(e.output) + "]");
        p.class_of[static_cast<size_t>(idx)] = entry[2].get<int>();
    }
    return p;
}

std::string colouring_to_json(const VertexColouring& c) {
    nlohmann::json j{{"t", c.t}, {"k", c.k}, {"colours", c.colour_of}};
    return j.dump();
}

VertexColouring colouring_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("t") || !j.contains("k") || !j.contains("colours"))
        throw InputError("colouring witness needs fields \"t\", \"k\" and \"colours\"");
    VertexColouring c;
    c.t = j["t"].get<int>();
    c.k = j["k"].get<int>();
    if (!j["colours"].is_array() || static_cast<int>(j["colours"].size()) != g.vertex_count())
        throw InputError("witness does not match the graph: expected " +
                         std::to_string(g.vertex_count()) + " colours, got " +
                         std::to_string(j["colours"].size()));
    c.colour_of = j["colours"].get<std::vector<int>>();
    return c;
}

Witness witness_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j = parse_json(text);
    Witness w;
    if (j.is_object() && j.contains("entries"))
        w.partition = partition_from_json(g, text);
    else if (j.is_object() && j.contains("colours"))
        w.colouring = colouring_from_json(g, text);
    else
        throw InputError("witness must contain \"entries\" (partition) or \"colours\" (colouring)");
    return w;
}

std::string to_dot(const Graph& g, const std::optional<VertexColouring>& colouring,
                   const std::optional<CircularPartition>& partition) {
    static const char* palette[] = {"#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854",
                                    "#ffd92f", "#e5c494", "#b3b3b3"};
    std::ostringstream out;
    const bool directed = partition.has_value();
    out << (directed ? "digraph" : "graph") << " g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (colouring) {
            int c = colouring->colour_of[static_cast<size_t>(v)];
            out << " [label=\"" << v << " : " << c << "\", style=filled, fillcolor=\""
                << palette[c % 8] << "\"]";
        }
        out << ";\n";
    }
    if (partition) {
        const auto edges = oriented_edges(g);
        for (size_t i = 0; i < edges.size(); ++i)
            out << "  " << edges[i].input << " -> " << edges[i].output << " [label=\""
                << partition->class_of[i] << "\"];\n";
    } else {
        for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace percolour
