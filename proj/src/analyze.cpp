#include "percolour/analyze.hpp"

#include <sstream>

#include "json.hpp"
#include "percolour/serialize.hpp"

namespace percolour {

AnalysisReport analyze(const CorpusEntry& entry, int t_lo, int t_hi) {
    const Graph& g = entry.graph;
    if (t_lo < 1 || t_hi > g.vertex_count() || t_lo > t_hi)
        throw InputError("t range must satisfy 1 <= lo <= hi <= n");

    AnalysisReport r;
    r.input_name = entry.name;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.deg_min = g.min_degree();
    r.deg_max = g.max_degree();
    r.cls = classify(g);
    r.girth_value = girth(g);
    r.bipartite = is_bipartite(g).bipartite();

    r.chi_o_value = chi_o(g);
    r.feasible_k = feasible_k_set(g);
    auto witness = is_circularly_k_partite(g, r.chi_o_value);
    if (!witness || !verify_partition(g, *witness).empty())
        throw Error("chi_o witness failed to verify");  // cannot happen
    r.witness = std::move(*witness);
    r.witness_json = partition_to_json(g, r.witness);

    for (int t = t_lo; t <= t_hi; ++t) {
        auto ct = chi_t(g, t);
        auto colouring = build_t_periodic_colouring(g, t);
        if (!verify_t_periodic(g, t, colouring).empty())
            throw Error("chi_t witness failed to verify");  // cannot happen
        r.chi_t_rows.push_back({t, ct.k, std::move(ct.unconstrained)});
    }

    if (g.vertex_count() <= kChiVertexCap && g.edge_count() <= kChiStarEdgeCap) {
        r.classic = chroma(g);
    } else {
        std::ostringstream note;
        note << "skipped: exact caps are " << kChiVertexCap << " vertices / " << kChiStarEdgeCap
             << " edges";
        r.classic_note = note.str();
    }

    for (const auto& predicate : theorem_predicates())
        r.theorems.push_back({predicate.name, predicate.check(entry)});
    return r;
}

namespace {

const char* status_word(PredicateResult::Status s) {
    switch (s) {
        case PredicateResult::Status::pass: return "pass";
        case PredicateResult::Status::fail: return "fail";
        case PredicateResult::Status::skip: return "skip";
    }
    return "?";
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "graph " << r.input_name << ": n=" << r.n << " m=" << r.m << " degrees " << r.deg_min
        << ".." << r.deg_max << "\n";
    out << "class: " << to_string(r.cls.kind);
    if (r.cls.kind == GraphKind::path) out << " (length " << r.cls.path_length << ")";
    if (r.cls.kind == GraphKind::cycle) out << " (N=" << r.cls.cycle_length << ")";
    if (r.cls.kind == GraphKind::star || r.cls.kind == GraphKind::extended_star)
        out << " (diameter " << r.cls.diameter << ")";
    out << ", girth " << (r.girth_value ? std::to_string(*r.girth_value) : std::string("none"))
        << ", bipartite " << (r.bipartite ? "yes" : "no") << "\n";

    out << "chi_o: " << r.chi_o_value << "\n";
    out << "feasible k:";
    for (int k : r.feasible_k) out << ' ' << k;
    out << "\n";

    if (!r.chi_t_rows.empty()) {
        out << "chi_t:";
        for (const auto& row : r.chi_t_rows) out << " t=" << row.t << ":" << row.k;
        out << "\n";
        for (const auto& row : r.chi_t_rows)
            if (!row.unconstrained.empty()) {
                out << "  t=" << row.t << " unconstrained vertices:";
                for (int v : row.unconstrained) out << ' ' << v;
                out << "\n";
            }
    }

    if (r.classic) {
        out << "chi: " << r.classic->chi << ", chi_star: " << r.classic->chi_star << " (delta "
            << r.classic->delta << ", class " << to_string(r.classic->vizing_class) << ")\n";
    } else {
        out << "chi/chi_star " << r.classic_note << "\n";
    }

    out << "theorem checks:\n";
    for (const auto& flag : r.theorems) {
        out << "  " << flag.name << ": " << status_word(flag.result.status);
        if (!flag.result.detail.empty()) out << " (" << flag.result.detail << ")";
        out << "\n";
    }
    return out.str();
}

std::string render_json(const AnalysisReport& r) {
    nlohmann::json cls{{"kind", to_string(r.cls.kind)}};
    if (r.cls.kind == GraphKind::path) cls["path_length"] = r.cls.path_length;
    if (r.cls.kind == GraphKind::cycle) cls["cycle_length"] = r.cls.cycle_length;
    if (r.cls.kind == GraphKind::star || r.cls.kind == GraphKind::extended_star)
        cls["diameter"] = r.cls.diameter;

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.chi_t_rows)
        rows.push_back({{"t", row.t}, {"k", row.k}, {"unconstrained", row.unconstrained}});

    nlohmann::json theorems = nlohmann::json::array();
    for (const auto& flag : r.theorems) {
        nlohmann::json t{{"name", flag.name}, {"status", status_word(flag.result.status)}};
        if (!flag.result.detail.empty()) t["detail"] = flag.result.detail;
        theorems.push_back(std::move(t));
    }

    nlohmann::json j{
        {"input", r.input_name},
        {"graph",
         {{"n", r.n},
          {"m", r.m},
          {"deg_min", r.deg_min},
          {"deg_max", r.deg_max},
          {"class", std::move(cls)},
          {"girth", r.girth_value ? nlohmann::json(*r.girth_value) : nlohmann::json(nullptr)},
          {"bipartite", r.bipartite}}},
        {"chi_o", r.chi_o_value},
        {"feasible_k", r.feasible_k},
        {"witness", nlohmann::json::parse(r.witness_json)},
        {"chi_t", std::move(rows)},
        {"theorems", std::move(theorems)},
    };
    if (r.classic) {
        j["chi"] = r.classic->chi;
        j["chi_star"] = r.classic->chi_star;
        j["delta"] = r.classic->delta;
        j["vizing_class"] = to_string(r.classic->vizing_class);
    } else {
        j["classic_note"] = r.classic_note;
    }
    return j.dump(2) + "\n";
}

std::string render_dot(const Graph& g, const AnalysisReport& r) {
    std::optional<VertexColouring> colouring;
    if (!r.chi_t_rows.empty()) {
        const auto& row = r.chi_t_rows.back();
        colouring = build_t_periodic_colouring(g, row.t);
    }
    return to_dot(g, colouring, r.witness);
}

}  // namespace percolour
