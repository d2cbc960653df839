#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "percolour/analyze.hpp"
#include "percolour/classic.hpp"
#include "percolour/families.hpp"
#include "percolour/oracles.hpp"
#include "percolour/oriented.hpp"
#include "percolour/serialize.hpp"
#include "percolour/survey.hpp"
#include "percolour/vertex_periodic.hpp"

namespace py = pybind11;
using namespace percolour;

namespace {

py::dict partition_dict(const Graph& g, const CircularPartition& p) {
    py::list entries;
    const auto edges = oriented_edges(g);
    for (size_t i = 0; i < edges.size(); ++i)
        entries.append(py::make_tuple(edges[i].input, edges[i].output, p.class_of[i]));
    py::dict d;
    d["k"] = p.k;
    d["entries"] = entries;
    return d;
}

CircularPartition partition_from_entries(const Graph& g, int k,
                                         const std::vector<std::tuple<int, int, int>>& entries) {
    CircularPartition p;
    p.k = k;
    p.class_of.assign(static_cast<size_t>(2 * g.edge_count()), -1);
    if (entries.size() != p.class_of.size())
        throw InputError("entry count does not match the graph's oriented edges");
    for (const auto& [v, w, cls] : entries)
        p.class_of[static_cast<size_t>(oriented_edge_index(g, {v, w}))] = cls;
    return p;
}

py::dict colouring_dict(const VertexColouring& c) {
    py::dict d;
    d["t"] = c.t;
    d["k"] = c.k;
    d["colours"] = c.colour_of;
    return d;
}

Graph graph_from_input(const std::string& input) {
    if (looks_like_family(input)) return generate(parse_family(input)).graph;
    return parse_edge_list(input);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact periodic colouring numbers of simple connected graphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapError>(m, "CapError", PyExc_OverflowError);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbours", &Graph::neighbours, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); },
          py::arg("text"), "Parse line-oriented edge-list text into a Graph.");
    m.def("canonical_edge_text", &canonical_edge_text, py::arg("graph"));

    m.def(
        "generate",
        [](const std::string& shorthand) {
            FamilyInstance inst = generate(parse_family(shorthand));
            py::dict expected;
            if (inst.expected.chi_o) expected["chi_o"] = *inst.expected.chi_o;
            if (inst.expected.chi) expected["chi"] = *inst.expected.chi;
            return py::make_tuple(std::move(inst.graph), expected);
        },
        py::arg("shorthand"),
        "Build a named family graph, e.g. 'cycle:6', 'petal:3x4', 'random:10,14,42'.");
    m.def("subdivide", &subdivide, py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("times"));

    m.def("classify", [](const Graph& g) {
        GraphClass c = classify(g);
        py::dict d;
        d["kind"] = std::string(to_string(c.kind));
        if (c.kind == GraphKind::path) d["path_length"] = c.path_length;
        if (c.kind == GraphKind::cycle) d["cycle_length"] = c.cycle_length;
        if (c.kind == GraphKind::star || c.kind == GraphKind::extended_star)
            d["diameter"] = c.diameter;
        if (c.girth) d["girth"] = *c.girth;
        return d;
    });
    m.def("is_bipartite", [](const Graph& g) {
        auto bc = is_bipartite(g);
        py::dict d;
        d["bipartite"] = bc.bipartite();
        if (bc.bipartite())
            d["sides"] = py::make_tuple(bc.partition->side0, bc.partition->side1);
        else
            d["odd_closed_walk"] = bc.odd_closed_walk;
        return d;
    });
    m.def("girth", [](const Graph& g) -> std::optional<int> { return girth(g); });
    m.def("distance", &distance, py::arg("graph"), py::arg("u"), py::arg("v"));
    m.def("branch_vertices", &branch_vertices);
    m.def("oriented_edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : oriented_edges(g)) out.emplace_back(e.input, e.output);
        return out;
    });
    m.def("nb_arc_count", [](const Graph& g) { return nb_arcs(g).size(); });

    m.def("chi_o", &chi_o, py::arg("graph"),
          "Largest k for which the graph is circularly k-partite.");
    m.def("feasible_k_set", &feasible_k_set, py::arg("graph"));
    m.def(
        "is_circularly_k_partite",
        [](const Graph& g, int k) -> std::optional<py::dict> {
            auto p = is_circularly_k_partite(g, k);
            if (!p) return std::nullopt;
            return partition_dict(g, *p);
        },
        py::arg("graph"), py::arg("k"));
    m.def(
        "verify_partition",
        [](const Graph& g, int k, const std::vector<std::tuple<int, int, int>>& entries) {
            std::vector<std::string> out;
            for (const auto& v : verify_partition(g, partition_from_entries(g, k, entries)))
                out.push_back(v.describe());
            return out;
        },
        py::arg("graph"), py::arg("k"), py::arg("entries"));

    m.def(
        "chi_t",
        [](const Graph& g, int t) {
            auto r = chi_t(g, t);
            return py::make_tuple(r.k, r.unconstrained);
        },
        py::arg("graph"), py::arg("t"),
        "Vertex t-periodic colouring number and the vertices no length-t path reaches.");
    m.def(
        "build_t_periodic_colouring",
        [](const Graph& g, int t) { return colouring_dict(build_t_periodic_colouring(g, t)); },
        py::arg("graph"), py::arg("t"));
    m.def(
        "verify_t_periodic",
        [](const Graph& g, int t, const std::vector<int>& colours) {
            VertexColouring c{t, colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1,
                              colours};
            std::vector<std::vector<int>> out;
            for (const auto& v : verify_t_periodic(g, t, c)) out.push_back(v.path);
            return out;
        },
        py::arg("graph"), py::arg("t"), py::arg("colours"));

    m.def("chroma", [](const Graph& g) {
        ChromaResult r = chroma(g);
        py::dict d;
        d["chi"] = r.chi;
        d["chi_star"] = r.chi_star;
        d["delta"] = r.delta;
        d["vizing_class"] = std::string(to_string(r.vizing_class));
        return d;
    });
    m.def("chi", &chi, py::arg("graph"));
    m.def("chi_star", &chi_star, py::arg("graph"));

    m.def("oracle_chi_o", &oracle_chi_o, py::arg("graph"));
    m.def("oracle_chi_t", &oracle_chi_t, py::arg("graph"), py::arg("t"));

    m.def(
        "analyze_json",
        [](const std::string& input, int t_lo, int t_hi) {
            CorpusEntry entry{input, graph_from_input(input), std::nullopt, {}};
            return render_json(analyze(entry, t_lo, t_hi));
        },
        py::arg("input"), py::arg("t_lo") = 1, py::arg("t_hi") = 4,
        "Full analysis report as a JSON string; input is family shorthand or edge-list text.");

    m.def(
        "survey_json",
        [](unsigned seed) { return render_json(run_survey(default_corpus(seed))); },
        py::arg("seed") = 0, "Run the theorem predicate suite over the default corpus.");
}
