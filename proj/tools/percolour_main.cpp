#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "percolour/analyze.hpp"
#include "percolour/families.hpp"
#include "percolour/oracles.hpp"
#include "percolour/serialize.hpp"
#include "percolour/survey.hpp"

namespace {

using namespace percolour;

constexpr int kExitOk = 0;
constexpr int kExitPredicateFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + out_path);
    out << content;
}

// Either a family shorthand ("cycle:6") or a path to an edge-list file.
CorpusEntry load_input(const std::string& input) {
    if (looks_like_family(input)) return corpus_entry(parse_family(input));
    return {input, parse_edge_list(read_file(input)), std::nullopt, {}};
}

std::pair<int, int> parse_t_range(const std::string& text, int n) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int t = std::stoi(text);
            return {t, t};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("bad t range \"" + text + "\" (expected A..B with 1 <= A <= B <= " +
                         std::to_string(n) + ")");
    }
}

bool enumeration_cheap(const Graph& g, int t) {
    double est = g.vertex_count();
    for (int i = 1; i < t; ++i) {
        est *= std::max(1, g.max_degree() - 1);
        if (est > 2e6) return false;
    }
    return true;
}

// Names the violated condition when no circular k-partition exists.
std::string explain_infeasible(const Graph& g, int k) {
    std::ostringstream why;
    try {
        for (int len : cycle_lengths(g))
            if (len % k != 0) {
                why << "a cycle of length " << len << " is not a multiple of k=" << k;
                return why.str();
            }
    } catch (const CapError&) {
        // enumeration too costly; fall through to the other conditions
    }
    auto branches = branch_vertices(g);
    for (size_t i = 0; i < branches.size(); ++i)
        for (size_t j = i + 1; j < branches.size(); ++j) {
            int d = distance(g, branches[i], branches[j]);
            if ((2 * d) % k != 0) {
                why << "branch vertices " << branches[i] << " and " << branches[j]
                    << " lie at distance " << d << " and 2*" << d << " is not a multiple of k="
                    << k;
                return why.str();
            }
        }
    int attainable = 0;
    for (const auto& comp : constraint_components(g))
        attainable += static_cast<int>(std::min<size_t>(comp.value_set.size(), static_cast<size_t>(k)));
    why << "only " << std::min(attainable, k - 1) << " of the " << k
        << " classes can be made non-empty";
    return why.str();
}

int cmd_analyze(const std::string& input, const std::string& t_range, const std::string& format,
                const std::string& out_path) {
    CorpusEntry entry = load_input(input);
    const int n = entry.graph.vertex_count();
    int t_lo = 1, t_hi = std::min(6, n);
    if (!t_range.empty()) {
        std::tie(t_lo, t_hi) = parse_t_range(t_range, n);
    } else {
        while (t_hi > 1 && !enumeration_cheap(entry.graph, t_hi)) --t_hi;
    }
    AnalysisReport report = analyze(entry, t_lo, t_hi);
    if (format == "json")
        write_output(out_path, render_json(report));
    else if (format == "dot")
        write_output(out_path, render_dot(entry.graph, report));
    else
        write_output(out_path, render_text(report));
    return kExitOk;
}

int cmd_colour(const std::string& input, int circular_k, int periodic_t, const std::string& format,
               const std::string& out_path) {
    CorpusEntry entry = load_input(input);
    const Graph& g = entry.graph;
    if ((circular_k > 0) == (periodic_t > 0))
        throw InputError("choose exactly one of --circular K or --periodic T");

    if (circular_k > 0) {
        auto p = is_circularly_k_partite(g, circular_k);
        if (!p) {
            std::cerr << "not circularly " << circular_k << "-partite: "
                      << explain_infeasible(g, circular_k) << "\n";
            return kExitPredicateFailure;
        }
        write_output(out_path, format == "dot" ? to_dot(g, std::nullopt, *p)
                                               : partition_to_json(g, *p) + "\n");
        return kExitOk;
    }

    VertexColouring c = build_t_periodic_colouring(g, periodic_t);
    write_output(out_path, format == "dot" ? to_dot(g, c, std::nullopt)
                                           : colouring_to_json(c) + "\n");
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& witness_path) {
    CorpusEntry entry = load_input(input);
    const Graph& g = entry.graph;
    Witness w = witness_from_json(g, read_file(witness_path));

    if (w.partition) {
        auto violations = verify_partition(g, *w.partition);
        for (const auto& v : violations) std::cout << v.describe() << "\n";
        if (violations.empty()) {
            std::cout << "ok: valid circular " << w.partition->k << "-partition\n";
            return kExitOk;
        }
        return kExitPredicateFailure;
    }

    const auto& c = *w.colouring;
    auto violations = verify_t_periodic(g, c.t, c);
    for (const auto& v : violations) {
        std::cout << "path";
        for (int x : v.path) std::cout << ' ' << x;
        std::cout << " joins colours " << c.colour_of[static_cast<size_t>(v.path.front())] << " and "
                  << c.colour_of[static_cast<size_t>(v.path.back())] << "\n";
    }
    if (violations.empty()) {
        std::cout << "ok: valid " << c.t << "-periodic colouring\n";
        return kExitOk;
    }
    return kExitPredicateFailure;
}

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& ch : out)
        if (!isalnum(static_cast<unsigned char>(ch))) ch = '_';
    return out;
}

int cmd_survey(const std::vector<std::string>& families, const std::string& random_spec,
               unsigned seed, const std::string& format, const std::string& out_path) {
    std::vector<CorpusEntry> corpus;
    if (families.empty() && random_spec.empty()) {
        corpus = default_corpus(seed);
    } else {
        SurveySpec spec;
        spec.families = families;
        spec.seed = seed;
        if (!random_spec.empty()) {
            std::istringstream in(random_spec);
            char c1 = 0, c2 = 0;
            if (!(in >> spec.random_count >> c1 >> spec.random_max_n >> c2 >> spec.random_max_m) ||
                c1 != ',' || c2 != ',' || spec.random_count < 1)
                throw InputError("bad --random spec \"" + random_spec +
                                 "\" (expected COUNT,MAX_N,MAX_M)");
        }
        corpus = build_corpus(spec);
    }

    SurveyReport report = run_survey(corpus);
    write_output(out_path, format == "json" ? render_json(report) : render_text(report));

    if (!report.all_pass()) {
        for (const auto& p : report.predicates)
            for (const auto& [entry_name, detail] : p.failures) {
                for (const auto& entry : corpus)
                    if (entry.name == entry_name) {
                        std::string path = "counterexample_" + sanitize(p.name) + "_" +
                                           sanitize(entry_name) + ".edges";
                        std::ofstream dump(path);
                        dump << canonical_edge_text(entry.graph);
                        std::cerr << "wrote " << path << "\n";
                        break;
                    }
            }
        return kExitPredicateFailure;
    }
    return kExitOk;
}

int cmd_oracle(const std::string& input, int periodic_t) {
    CorpusEntry entry = load_input(input);
    if (periodic_t > 0)
        std::cout << "oracle_chi_t(t=" << periodic_t
                  << "): " << oracle_chi_t(entry.graph, periodic_t) << "\n";
    else
        std::cout << "oracle_chi_o: " << oracle_chi_o(entry.graph) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periodic colouring numbers of simple connected graphs"};
    app.require_subcommand(1);

    std::string input, t_range, format = "text", out_path, witness_path, random_spec;
    std::vector<std::string> families;
    int circular_k = 0, periodic_t = 0;
    unsigned seed = 0;

    auto add_format = [&](CLI::App* cmd, bool dot_allowed) {
        cmd->add_option("--format", format,
                        dot_allowed ? "output format: text|json|dot" : "output format: text|json")
            ->check(dot_allowed ? CLI::IsMember({"text", "json", "dot"})
                                : CLI::IsMember({"text", "json"}));
    };

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full report: class, chi_o, chi_t table, chi, chi_star");
    analyze_cmd->add_option("input", input, "edge-list file or family shorthand")->required();
    analyze_cmd->add_option("--t", t_range, "inclusive t range, e.g. 1..6");
    add_format(analyze_cmd, true);
    analyze_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* colour_cmd = app.add_subcommand("colour", "emit a colouring witness");
    colour_cmd->alias("color");
    colour_cmd->add_option("input", input, "edge-list file or family shorthand")->required();
    colour_cmd->add_option("--circular", circular_k, "emit a circular K-partition of oriented edges");
    colour_cmd->add_option("--periodic", periodic_t, "emit a maximal T-periodic vertex colouring");
    add_format(colour_cmd, true);
    colour_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a witness file against a graph");
    verify_cmd->add_option("input", input, "edge-list file or family shorthand")->required();
    verify_cmd->add_option("witness", witness_path, "witness JSON file")->required();

    CLI::App* survey_cmd = app.add_subcommand("survey", "run every theorem predicate over a corpus");
    survey_cmd->add_option("--family", families,
                           "family shorthand, repeatable; ranges allowed (cycle:3..12)");
    survey_cmd->add_option("--random", random_spec, "random corpus: COUNT,MAX_N,MAX_M");
    survey_cmd->add_option("--seed", seed, "corpus seed");
    add_format(survey_cmd, false);
    survey_cmd->add_option("--out", out_path, "write report to file instead of stdout");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force baselines for spot checks");
    oracle_cmd->add_option("input", input, "edge-list file or family shorthand")->required();
    oracle_cmd->add_option("--periodic", periodic_t, "check chi_t for this t instead of chi_o");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input, t_range, format, out_path);
        if (colour_cmd->parsed()) return cmd_colour(input, circular_k, periodic_t, format, out_path);
        if (verify_cmd->parsed()) return cmd_verify(input, witness_path);
        if (survey_cmd->parsed()) return cmd_survey(families, random_spec, seed, format, out_path);
        if (oracle_cmd->parsed()) return cmd_oracle(input, periodic_t);
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInputError;
}
