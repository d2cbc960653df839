// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] (optional) points at the CLI binary for the determinism check.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "percolour/analyze.hpp"
#include "percolour/classic.hpp"
#include "percolour/families.hpp"
#include "percolour/oracles.hpp"
#include "percolour/oriented.hpp"
#include "percolour/survey.hpp"
#include "percolour/vertex_periodic.hpp"

using namespace percolour;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion,
                label.c_str(), seconds, detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

struct Timer {
    clock_type::time_point start = clock_type::now();
    double elapsed() const {
        return std::chrono::duration<double>(clock_type::now() - start).count();
    }
};

Graph fam(const std::string& shorthand) { return generate(parse_family(shorthand)).graph; }

void criterion_1_family_table() {
    Timer timer;
    std::ostringstream bad;
    int checks = 0;
    auto expect = [&](const std::string& name, int want) {
        ++checks;
        int got = chi_o(fam(name));
        if (got != want) bad << name << ": chi_o=" << got << " expected " << want << "; ";
    };
    for (int m = 1; m <= 10; ++m) expect("path:" + std::to_string(m), 2 * m);
    for (int n = 3; n <= 20; ++n) expect("cycle:" + std::to_string(n), n);
    for (int n = 3; n <= 6; ++n) expect("star:" + std::to_string(n), 2);
    // five profiles whose two longest arms tie, where chi_o equals the diameter
    for (const auto& [arms, diam] :
         {std::pair<std::string, int>{"2,2,1", 4}, {"2,2,2", 4}, {"3,3,2", 6}, {"3,3,1", 6},
          {"4,4,2", 8}}) {
        ++checks;
        Graph g = fam("extstar:" + arms);
        int got = chi_o(g);
        if (got != diam || classify(g).diameter != diam)
            bad << "extstar:" << arms << ": chi_o=" << got << " diameter=" << classify(g).diameter
                << " expected " << diam << "; ";
    }
    for (int l = 1; l <= 3; ++l)
        for (int k = 3; k <= 5; ++k)
            expect("petal:" + std::to_string(l) + "x" + std::to_string(k), k);
    for (int n = 4; n <= 7; ++n) expect("complete:" + std::to_string(n), 1);

    double sec = timer.elapsed();
    bool ok = bad.str().empty() && sec < 5.0;
    std::ostringstream detail;
    detail << checks << " values exact" << (sec >= 5.0 ? ", over 5s budget" : "");
    report(1, "family regression table", ok, sec, bad.str().empty() ? detail.str() : bad.str());
}

void criterion_2_cycle_gcd() {
    Timer timer;
    std::ostringstream bad;
    int checks = 0;
    for (int n = 3; n <= 30; ++n) {
        Graph g = fam("cycle:" + std::to_string(n));
        for (int t = 1; t <= n - 1; ++t) {
            ++checks;
            int got = chi_t(g, t).k;
            if (got != std::gcd(t, n))
                bad << "C" << n << " t=" << t << ": " << got << " != " << std::gcd(t, n) << "; ";
        }
    }
    double sec = timer.elapsed();
    bool ok = bad.str().empty() && sec < 30.0;
    std::ostringstream detail;
    detail << checks << " pairs exact";
    report(2, "chi_t on cycles equals gcd(t, N)", ok, sec,
           bad.str().empty() ? detail.str() : bad.str());
}

void criterion_3_divisor_structure() {
    Timer timer;
    std::ostringstream bad;
    int applied = 0;
    for (const auto& entry : default_corpus(1234)) {
        const Graph& g = entry.graph;
        if (g.vertex_count() > 12) continue;
        GraphKind kind = classify(g).kind;
        if (kind == GraphKind::path || kind == GraphKind::star || kind == GraphKind::extended_star)
            continue;
        ++applied;
        std::vector<int> divs;
        int x = chi_o(g);
        for (int d = 1; d <= x; ++d)
            if (x % d == 0) divs.push_back(d);
        if (feasible_k_set(g) != divs) bad << entry.name << "; ";
    }
    bool ok = bad.str().empty() && applied >= 50;
    std::ostringstream detail;
    detail << applied << " graphs, feasible set = divisors(chi_o) on all";
    report(3, "divisor structure of the feasible set", ok, timer.elapsed(),
           bad.str().empty() ? detail.str() : bad.str());
}

std::vector<std::pair<std::string, Graph>> tau_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int l : {2, 3})
        for (int k : {3, 4, 5}) {
            std::string name = "petal:" + std::to_string(l) + "x" + std::to_string(k);
            out.emplace_back(name, fam(name));
        }
    for (auto [a, b, c] : {std::tuple{1, 2, 2}, {2, 2, 2}, {1, 2, 3}, {2, 2, 3}, {2, 3, 3},
                           {1, 3, 3}, {2, 2, 4}, {3, 3, 3}, {2, 4, 4}, {2, 2, 6}, {1, 2, 4},
                           {2, 3, 4}}) {
        std::ostringstream name;
        name << "theta:" << a << "," << b << "," << c;
        out.emplace_back(name.str(), make_theta(a, b, c));
    }
    out.emplace_back("mickey:2", fam("mickey:2"));
    out.emplace_back("mickey:3", fam("mickey:3"));
    out.emplace_back("fig4:2", fam("fig4:2"));
    {
        Graph g = fam("complete:4");
        for (auto [u, v] : fam("complete:4").edges()) g = subdivide(g, u, v, 1);
        out.emplace_back("k4_subdivided", g);
    }
    out.emplace_back("tri_square",
                     Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}}));
    return out;
}

void criterion_4_bridge_theorems() {
    Timer timer;
    std::ostringstream bad;

    // cycles: chi_t = t iff circularly t-partite, N <= 12
    for (int n = 3; n <= 12; ++n) {
        Graph g = fam("cycle:" + std::to_string(n));
        auto feasible = feasible_k_set(g);
        for (int t = 1; t <= n; ++t) {
            bool eq = chi_t(g, t).k == t;
            bool partite = std::binary_search(feasible.begin(), feasible.end(), t);
            if (eq != partite) bad << "C" << n << " t=" << t << "; ";
        }
    }

    // min-degree >= 2 non-cycles: chi_t = tau+1 iff circularly t-partite
    int qualifying = 0;
    for (const auto& [name, g] : tau_corpus()) {
        auto gr = girth(g);
        if (!gr || g.min_degree() < 2 || classify(g).kind == GraphKind::cycle) continue;
        bool any_t = false;
        auto feasible = feasible_k_set(g);
        for (int t = 3; t <= std::min(*gr, g.vertex_count() - 1); ++t) {
            any_t = true;
            bool eq = chi_t(g, t).k == t / 2 + 1;
            bool partite = std::binary_search(feasible.begin(), feasible.end(), t);
            if (eq != partite) bad << name << " t=" << t << "; ";
        }
        if (any_t) ++qualifying;
    }

    bool ok = bad.str().empty() && qualifying >= 20;
    std::ostringstream detail;
    detail << "cycles 3..12 and " << qualifying << " non-cycle graphs, zero exceptions";
    report(4, "bridge theorems between chi_t and circular partitions", ok, timer.elapsed(),
           bad.str().empty() ? detail.str() : bad.str());
}

void criterion_5_classical_crosschecks() {
    Timer timer;
    std::ostringstream bad;
    int applied = 0;
    for (const auto& entry : default_corpus(99)) {
        const Graph& g = entry.graph;
        GraphKind kind = classify(g).kind;
        bool star_like = kind == GraphKind::star || kind == GraphKind::extended_star;
        int xo = chi_o(g);

        if (!star_like && g.vertex_count() <= kChiVertexCap) {
            ++applied;
            int x = chi(g);
            if ((xo % 2 == 0) != (x == 2)) bad << entry.name << " parity; ";
            if (xo % 2 == 1 && xo > 1 && x != 3) bad << entry.name << " odd chi_o; ";
        }
        // the class-one implication needs bipartiteness or max degree >= 3
        // (odd cycles are class two with chi_o = N > 1)
        if (g.edge_count() <= kChiStarEdgeCap && xo > 1 &&
            (is_bipartite(g).bipartite() || g.max_degree() >= 3)) {
            if (chi_star(g) != g.max_degree()) bad << entry.name << " class-one; ";
        }
        int d = g.min_degree();
        if (d >= 3 && d == g.max_degree()) {
            if (xo != 1 && xo != 2) bad << entry.name << " regular bound; ";
            if ((xo == 2) != is_bipartite(g).bipartite()) bad << entry.name << " regular-bipartite; ";
        }
        if (g.vertex_count() <= 12) {
            auto lens = cycle_lengths(g);
            bool coprime = false;
            for (size_t i = 0; i < lens.size() && !coprime; ++i)
                for (size_t j = i + 1; j < lens.size() && !coprime; ++j)
                    if (std::gcd(lens[i], lens[j]) == 1) coprime = true;
            if (coprime && xo != 1) bad << entry.name << " coprime cycles; ";
        }
    }
    bool ok = bad.str().empty() && applied >= 50;
    std::ostringstream detail;
    detail << "zero exceptions over the corpus (" << applied << " chi cross-checks)";
    report(5, "classical chromatic cross-checks", ok, timer.elapsed(),
           bad.str().empty() ? detail.str() : bad.str());
}

void criterion_6_oracle_equivalence() {
    Timer timer;
    std::ostringstream bad;
    std::vector<std::pair<std::string, Graph>> instances;
    auto add = [&](const std::string& name) { instances.emplace_back(name, fam(name)); };
    for (int m = 1; m <= 5; ++m) add("path:" + std::to_string(m));
    for (int n = 3; n <= 8; ++n) add("cycle:" + std::to_string(n));
    for (int n = 3; n <= 6; ++n) add("star:" + std::to_string(n));
    for (const char* arms : {"2,2,1", "2,1,1", "3,2,1", "2,2,2"})
        add(std::string("extstar:") + arms);
    add("complete:4");
    add("complete:5");
    add("petal:2x3");
    add("petal:2x4");
    add("fig4:1");
    add("fig4:2");
    for (auto [a, b, c] : {std::tuple{1, 2, 2}, {2, 2, 2}, {1, 2, 3}, {2, 2, 3}, {1, 3, 3}}) {
        std::ostringstream name;
        name << "theta:" << a << "," << b << "," << c;
        instances.emplace_back(name.str(), make_theta(a, b, c));
    }
    std::mt19937 rng(2026);
    while (instances.size() < 210) {
        std::uniform_int_distribution<int> pick_n(4, 7);
        int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_m(n - 1, std::min(10, n * (n - 1) / 2));
        int m = pick_m(rng);
        unsigned seed = rng();
        std::ostringstream name;
        name << "random:" << n << "," << m << "," << seed;
        instances.emplace_back(name.str(), generate({Family::random_connected, {n, m}, seed}).graph);
    }

    int circular_checks = 0, periodic_checks = 0;
    for (const auto& [name, g] : instances) {
        if (g.edge_count() <= kOracleEdgeCap) {
            ++circular_checks;
            if (chi_o(g) != oracle_chi_o(g)) bad << name << " chi_o; ";
        }
        if (g.vertex_count() <= kOracleVertexCap)
            for (int t = 1; t <= g.vertex_count(); ++t) {
                ++periodic_checks;
                if (chi_t(g, t).k != oracle_chi_t(g, t)) bad << name << " t=" << t << "; ";
            }
    }
    double sec = timer.elapsed();
    bool ok = bad.str().empty() && instances.size() >= 200 && sec < 60.0 &&
              circular_checks >= 200 && periodic_checks >= 200;
    std::ostringstream detail;
    detail << instances.size() << " instances, " << circular_checks << " chi_o + "
           << periodic_checks << " chi_t comparisons, zero mismatches";
    report(6, "oracle equivalence", ok, sec, bad.str().empty() ? detail.str() : bad.str());
}

void criterion_7_property_suite() {
    Timer timer;
    auto survey = run_survey(default_corpus(2718));
    std::ostringstream bad, detail;
    const char* needed[] = {"periodic_upper_bounds", "bipartite_iff_two_periodic",
                            "subcycle_gcd_bound", "palindromic_bound", "dense_two_colour_bound"};
    for (const char* name : needed) {
        bool found = false;
        for (const auto& p : survey.predicates)
            if (p.name == name) {
                found = true;
                if (p.applied == 0) bad << name << " never applied; ";
                if (p.passed != p.applied) {
                    bad << name << " " << p.passed << "/" << p.applied;
                    for (const auto& [e, d] : p.failures) bad << " [" << e << ": " << d << "]";
                    bad << "; ";
                }
                detail << name << " " << p.passed << "/" << p.applied << "  ";
            }
        if (!found) bad << name << " missing; ";
    }
    report(7, "quantified property suite", bad.str().empty(), timer.elapsed(),
           bad.str().empty() ? detail.str() : bad.str());
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

void criterion_8_determinism(const char* cli_path) {
    Timer timer;
    if (cli_path == nullptr) {
        auto a = render_text(run_survey(default_corpus(5)));
        auto b = render_text(run_survey(default_corpus(5)));
        report(8, "survey determinism (library renderer)", a == b && !a.empty(), timer.elapsed(),
               "no CLI path given");
        return;
    }
    std::string cmd = std::string(cli_path) + " survey --seed 5 2>/dev/null";
    std::string a = capture(cmd);
    std::string b = capture(cmd);
    bool ok = !a.empty() && a == b;
    std::ostringstream detail;
    detail << a.size() << " bytes, byte-identical across runs";
    report(8, "survey determinism", ok, timer.elapsed(), detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1_family_table();
    criterion_2_cycle_gcd();
    criterion_3_divisor_structure();
    criterion_4_bridge_theorems();
    criterion_5_classical_crosschecks();
    criterion_6_oracle_equivalence();
    criterion_7_property_suite();
    criterion_8_determinism(argc > 1 ? argv[1] : nullptr);

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
