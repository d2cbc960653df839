#include "percolour/survey.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

namespace percolour {

namespace {

std::optional<GraphKind> declared_kind_of(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return GraphKind::path;
        case Family::cycle: return GraphKind::cycle;
        case Family::star: return GraphKind::star;
        case Family::extended_star: {
            bool all_unit = std::all_of(spec.params.begin(), spec.params.end(),
                                        [](int a) { return a == 1; });
            return all_unit ? GraphKind::star : GraphKind::extended_star;
        }
        case Family::complete:
            if (spec.params[0] == 2) return GraphKind::path;
            if (spec.params[0] == 3) return GraphKind::cycle;
            return GraphKind::general;
        case Family::petal: return spec.params[0] == 1 ? GraphKind::cycle : GraphKind::general;
        case Family::mickey_mouse: return GraphKind::general;
        case Family::subdivided: return GraphKind::general;
        case Family::random_connected: return std::nullopt;
    }
    return std::nullopt;
}



// Accepts "name:...a..b" and expands the trailing range on the last parameter.
void expand_family(const std::string& shorthand, std::vector<CorpusEntry>& out) {
    auto dots = shorthand.rfind("..");
    if (dots == std::string::npos) {
        out.push_back(corpus_entry(parse_family(shorthand)));
        return;
    }
    auto tail_start = shorthand.find_last_of(":,x", dots);
    if (tail_start == std::string::npos)
        throw InputError("bad family range \"" + shorthand + "\"");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(shorthand.substr(tail_start + 1, dots - tail_start - 1));
        hi = std::stoi(shorthand.substr(dots + 2));
    } catch (const std::exception&) {
        throw InputError("bad family range \"" + shorthand + "\"");
    }
    if (hi < lo) throw InputError("empty family range \"" + shorthand + "\"");
    for (int v = lo; v <= hi; ++v)
        out.push_back(corpus_entry(parse_family(shorthand.substr(0, tail_start + 1) + std::to_string(v))));
}

}  // namespace

CorpusEntry corpus_entry(const FamilySpec& spec) {
    FamilyInstance inst = generate(spec);
    return {inst.name, std::move(inst.graph), declared_kind_of(spec), inst.expected};
}

Graph make_theta(int a, int b, int c) {
    std::vector<int> lens{a, b, c};
    std::sort(lens.begin(), lens.end());
    if (lens[0] < 1 || lens[1] < 2)
        throw InputError("theta needs three path lengths >= 1 with at most one equal to 1");
    std::vector<std::pair<int, int>> e;
    int next = 2;  // 0 and 1 are the branch vertices
    for (int len : lens) {
        int prev = 0;
        for (int i = 0; i < len - 1; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph::from_edges(next, e);
}

std::vector<CorpusEntry> build_corpus(const SurveySpec& spec) {
    std::vector<CorpusEntry> corpus;
    for (const auto& shorthand : spec.families) expand_family(shorthand, corpus);

    if (spec.random_count > 0) {
        std::mt19937 rng(spec.seed);
        std::uniform_int_distribution<int> pick_n(3, std::max(3, spec.random_max_n));
        for (int i = 0; i < spec.random_count; ++i) {
            int n = pick_n(rng);
            int max_m = std::min(spec.random_max_m, n * (n - 1) / 2);
            std::uniform_int_distribution<int> pick_m(n - 1, std::max(n - 1, max_m));
            int m = pick_m(rng);
            unsigned graph_seed = rng();
            FamilySpec fs{Family::random_connected, {n, m}, graph_seed};
            corpus.push_back(corpus_entry(fs));
        }
    }
    return corpus;
}

std::vector<CorpusEntry> default_corpus(unsigned seed) {
    SurveySpec spec;
    spec.families = {
        "path:1..8",
        "cycle:3..12",
        "star:3..6",
        "extstar:2,2,1",
        "extstar:3,2,1",
        "extstar:2,2,2",
        "extstar:3,3,2",
        "extstar:4,2,1,1",
        "complete:2..7",
        "petal:1x3",  "petal:1x4",  "petal:1x5",
        "petal:2x3",  "petal:2x4",  "petal:2x5",
        "petal:3x3",  "petal:3x4",  "petal:3x5",
        "mickey:2",
        "mickey:3",
        "fig4:1",
        "fig4:2",
    };
    spec.random_count = 60;
    spec.random_max_n = 8;
    spec.random_max_m = 12;
    spec.seed = seed;
    auto corpus = build_corpus(spec);

    auto add_fixture = [&](std::string name, Graph g) {
        corpus.push_back({std::move(name), std::move(g), GraphKind::general, {}});
    };
    for (auto [a, b, c] : {std::tuple{1, 2, 2}, {2, 2, 2}, {1, 2, 3}, {2, 2, 3}, {2, 3, 3},
                           {1, 3, 3}, {2, 2, 4}, {3, 3, 3}, {2, 4, 4}, {2, 2, 6}, {1, 2, 4},
                           {2, 3, 4}}) {
        std::ostringstream name;
        name << "theta:" << a << ',' << b << ',' << c;
        add_fixture(name.str(), make_theta(a, b, c));
    }

    // Triangle and square sharing one vertex: chi = 3 with chi_o = 1.
    add_fixture("tri_square", Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}}));

    // Complete graph with every edge subdivided once: min degree 2, girth 6.
    {
        Graph k4 = generate(parse_family("complete:4")).graph;
        Graph g = k4;
        auto original_edges = k4.edges();
        for (auto [u, v] : original_edges) g = subdivide(g, u, v, 1);
        add_fixture("k4_subdivided", g);
    }
    return corpus;
}

SurveyReport run_survey(const std::vector<CorpusEntry>& corpus) {
    SurveyReport report;
    report.corpus_size = static_cast<int>(corpus.size());
    for (const auto& predicate : theorem_predicates()) {
        PredicateSummary summary;
        summary.name = predicate.name;
        for (const auto& entry : corpus) {
            PredicateResult r = predicate.check(entry);
            if (r.status == PredicateResult::Status::skip) {
                ++summary.skipped;
                continue;
            }
            ++summary.applied;
            if (r.status == PredicateResult::Status::pass)
                ++summary.passed;
            else
                summary.failures.emplace_back(entry.name, r.detail);
        }
        report.predicates.push_back(std::move(summary));
    }
    return report;
}

bool SurveyReport::all_pass() const {
    for (const auto& p : predicates)
        if (p.passed != p.applied) return false;
    return true;
}

std::string render_text(const SurveyReport& report) {
    std::ostringstream out;
    out << "corpus size: " << report.corpus_size << "\n";
    for (const auto& p : report.predicates) {
        out << p.name << ": " << p.passed << "/" << p.applied
            << (p.passed == p.applied ? " pass" : " FAIL");
        if (p.skipped > 0) out << " (" << p.skipped << " skipped)";
        out << "\n";
        for (const auto& [entry, detail] : p.failures)
            out << "  counterexample " << entry << ": " << detail << "\n";
    }
    out << (report.all_pass() ? "survey: all predicates pass" : "survey: FAILURES found") << "\n";
    return out.str();
}

std::string render_json(const SurveyReport& report) {
    nlohmann::json preds = nlohmann::json::array();
    for (const auto& p : report.predicates) {
        nlohmann::json fails = nlohmann::json::array();
        for (const auto& [entry, detail] : p.failures) fails.push_back({{"entry", entry}, {"detail", detail}});
        preds.push_back({{"name", p.name}, {"applied", p.applied}, {"passed", p.passed},
                         {"skipped", p.skipped}, {"failures", std::move(fails)}});
    }
    nlohmann::json j{{"corpus_size", report.corpus_size},
                     {"predicates", std::move(preds)},
                     {"all_pass", report.all_pass()}};
    return j.dump(2) + "\n";
}

}  // namespace percolour
