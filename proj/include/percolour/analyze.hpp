#pragma once

#include <optional>
#include <string>
#include <vector>

#include "percolour/classic.hpp"
#include "percolour/oriented.hpp"
#include "percolour/properties.hpp"
#include "percolour/vertex_periodic.hpp"

namespace percolour {

struct TheoremFlag {
    std::string name;
    PredicateResult result;
};

/// Everything the analyze command reports about one graph. Witnesses are
/// re-verified before being included.
struct AnalysisReport {
    std::string input_name;
    int n = 0;
    int m = 0;
    int deg_min = 0;
    int deg_max = 0;
    GraphClass cls;
    std::optional<int> girth_value;
    bool bipartite = false;

    int chi_o_value = 0;
    std::vector<int> feasible_k;
    CircularPartition witness;
    std::string witness_json;

    struct ChiTRow {
        int t = 0;
        int k = 0;
        std::vector<int> unconstrained;
    };
    std::vector<ChiTRow> chi_t_rows;

    std::optional<ChromaResult> classic;  // absent when a cap is exceeded
    std::string classic_note;

    std::vector<TheoremFlag> theorems;
};

AnalysisReport analyze(const CorpusEntry& entry, int t_lo, int t_hi);

std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

/// Graph with chi_o witness classes on the arcs and, when the report holds a
/// chi_t row for the largest requested t, that colouring on the nodes.
std::string render_dot(const Graph& g, const AnalysisReport& report);

}  // namespace percolour
