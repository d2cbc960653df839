#include "percolour/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace percolour {

std::optional<int> ExpectedValues::chi_t(int t) const {
    if (!chi_t_formula) return std::nullopt;
    switch (*chi_t_formula) {
        case ChiTFormula::gcd_t_n: return std::gcd(t, formula_n);
        case ChiTFormula::t_itself: return t;
        case ChiTFormula::one: return 1;
    }
    return std::nullopt;
}

namespace {

[[noreturn]] void reject(const std::string& constraint) {
    throw InputError("family parameter out of range: " + constraint);
}

Graph make_path(int edges) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(edges + 1, e);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph make_spider(const std::vector<int>& arms) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : arms) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, e);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph make_petal(int petals, int len) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int p = 0; p < petals; ++p) {
        int prev = 0;
        for (int i = 0; i < len - 1; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 0);
    }
    return Graph::from_edges(next, e);
}

Graph make_mickey(int k) {
    std::vector<std::pair<int, int>> e;
    const int face = 5 * k;
    for (int i = 0; i < face; ++i) e.emplace_back(i, (i + 1) % face);
    int next = face;
    for (int attach : {0, k}) {
        int prev = attach;
        for (int i = 0; i < 2 * k - 1; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, attach);
    }
    return Graph::from_edges(next, e);
}

Graph make_random_connected(int n, int m, unsigned seed) {
    const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_m) reject("random_connected needs m <= n(n-1)/2");
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> e;

    if (n == 2) {
        e.emplace_back(0, 1);
    } else {
        // Uniform labelled tree via a random Pruefer sequence.
        std::vector<int> pruefer(static_cast<size_t>(n - 2));
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (auto& x : pruefer) x = pick(rng);
        std::vector<int> deg(static_cast<size_t>(n), 1);
        for (int x : pruefer) ++deg[static_cast<size_t>(x)];
        int ptr = 0;
        while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
        int leaf = ptr;
        for (int x : pruefer) {
            e.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--deg[static_cast<size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
                leaf = ptr;
            }
        }
        e.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    }

    if (static_cast<int>(e.size()) < m) {
        std::sort(e.begin(), e.end());
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!std::binary_search(e.begin(), e.end(), std::make_pair(u, v)))
                    candidates.emplace_back(u, v);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        e.insert(e.end(), candidates.begin(), candidates.begin() + (m - static_cast<long>(e.size())));
    }
    return Graph::from_edges(n, e);
}

// The two fixture graphs that differ by one edge subdivision: a diamond
// (outer 4-cycle 0-1-2-3 with chord 0-2, so two inner triangles), and the
// same graph with the chord subdivided once, making every cycle length 4.
Graph make_fig_fixture(int which) {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    if (which == 1) return diamond;
    return subdivide(diamond, 0, 2, 1);
}

std::string canonical_name(const FamilySpec& spec) {
    std::ostringstream out;
    auto join = [&](char sep) {
        for (size_t i = 0; i < spec.params.size(); ++i) out << (i ? std::string(1, sep) : "") << spec.params[i];
    };
    switch (spec.family) {
        case Family::path: out << "path:"; join(','); break;
        case Family::cycle: out << "cycle:"; join(','); break;
        case Family::star: out << "star:"; join(','); break;
        case Family::extended_star: out << "extstar:"; join(','); break;
        case Family::complete: out << "complete:"; join(','); break;
        case Family::petal: out << "petal:"; join('x'); break;
        case Family::mickey_mouse: out << "mickey:"; join(','); break;
        case Family::random_connected:
            out << "random:";
            join(',');
            out << ',' << spec.seed;
            break;
        case Family::subdivided: out << "fig4:"; join(','); break;
    }
    return out.str();
}

}  // namespace

FamilyInstance generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    ExpectedValues exp;
    std::optional<Graph> g;

    switch (spec.family) {
        case Family::path: {
            if (p.size() != 1 || p[0] < 1) reject("path needs length M >= 1");
            g = make_path(p[0]);
            exp.chi_o = 2 * p[0];
            exp.chi_t_formula = ChiTFormula::t_itself;
            exp.chi = 2;
            break;
        }
        case Family::cycle: {
            if (p.size() != 1 || p[0] < 3) reject("cycle needs N >= 3");
            g = make_cycle(p[0]);
            exp.chi_o = p[0];
            exp.chi_t_formula = ChiTFormula::gcd_t_n;
            exp.formula_n = p[0];
            exp.chi = p[0] % 2 == 0 ? 2 : 3;
            break;
        }
        case Family::star: {
            if (p.size() != 1 || p[0] < 3) reject("star needs n >= 3 leaves");
            g = make_spider(std::vector<int>(static_cast<size_t>(p[0]), 1));
            exp.chi_o = 2;
            exp.chi = 2;
            break;
        }
        case Family::extended_star: {
            if (p.size() < 3) reject("extended_star needs >= 3 arm lengths");
            for (int a : p)
                if (a < 1) reject("extended_star arm lengths must be >= 1");
            g = make_spider(p);
            // chi_o doubles the longest arm: that arm's two orientations span
            // 2*a1 consecutive class values through the centre. This equals
            // the diameter exactly when the two longest arms tie.
            exp.chi_o = 2 * *std::max_element(p.begin(), p.end());
            exp.chi = 2;
            break;
        }
        case Family::complete: {
            if (p.size() != 1 || p[0] < 2) reject("complete needs N >= 2");
            g = make_complete(p[0]);
            exp.chi = p[0];
            if (p[0] >= 4) {
                exp.chi_o = 1;
                exp.chi_t_formula = ChiTFormula::one;
            }
            break;
        }
        case Family::petal: {
            if (p.size() != 2 || p[0] < 1 || p[1] < 3) reject("petal needs l >= 1 petals of length k >= 3");
            g = make_petal(p[0], p[1]);
            exp.chi_o = p[1];
            break;
        }
        case Family::mickey_mouse: {
            if (p.size() != 1 || p[0] < 2) reject("mickey_mouse needs k >= 2");
            g = make_mickey(p[0]);
            exp.chi_o = p[0];  // derived regression value; feasibility of k is the stated property
            break;
        }
        case Family::random_connected: {
            if (p.size() != 2 || p[0] < 2 || p[1] < p[0] - 1)
                reject("random_connected needs n >= 2 and m >= n-1");
            g = make_random_connected(p[0], p[1], spec.seed);
            break;
        }
        case Family::subdivided: {
            if (p.size() != 1 || (p[0] != 1 && p[0] != 2)) reject("fixture index must be 1 or 2");
            g = make_fig_fixture(p[0]);
            exp.chi_o = p[0] == 1 ? 1 : 4;
            break;
        }
    }
    return {std::move(*g), exp, canonical_name(spec)};
}

FamilySpec parse_family(std::string_view shorthand) {
    auto colon = shorthand.find(':');
    if (colon == std::string_view::npos)
        throw InputError("family shorthand must look like name:params (got \"" +
                         std::string(shorthand) + "\")");
    std::string name(shorthand.substr(0, colon));
    std::string args(shorthand.substr(colon + 1));
    for (char& c : args)
        if (c == 'x' || c == 'X') c = ',';

    std::vector<int> params;
    std::istringstream in(args);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            params.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad family parameter \"" + tok + "\" in \"" + std::string(shorthand) + "\"");
        }
    }
    if (params.empty()) throw InputError("family shorthand needs parameters: \"" + std::string(shorthand) + "\"");

    FamilySpec spec;
    if (name == "path") spec.family = Family::path;
    else if (name == "cycle") spec.family = Family::cycle;
    else if (name == "star") spec.family = Family::star;
    else if (name == "extstar" || name == "extended_star") spec.family = Family::extended_star;
    else if (name == "complete") spec.family = Family::complete;
    else if (name == "petal") spec.family = Family::petal;
    else if (name == "mickey" || name == "mickey_mouse") spec.family = Family::mickey_mouse;
    else if (name == "random") spec.family = Family::random_connected;
    else if (name == "fig4" || name == "subdivided") spec.family = Family::subdivided;
    else throw InputError("unknown family \"" + name + "\"");

    if (spec.family == Family::random_connected) {
        if (params.size() != 3) throw InputError("random shorthand is random:n,m,seed");
        spec.seed = static_cast<unsigned>(params[2]);
        params.resize(2);
    }
    spec.params = std::move(params);
    return spec;
}

bool looks_like_family(std::string_view input) {
    return input.find(':') != std::string_view::npos;
}

Graph subdivide(const Graph& g, int u, int v, int times) {
    if (times < 1) throw InputError("subdivision count must be >= 1");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw InputError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} to subdivide");
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) e.emplace_back(a, b);
    int prev = u, next = g.vertex_count();
    for (int i = 0; i < times; ++i) {
        e.emplace_back(prev, next);
        prev = next++;
    }
    e.emplace_back(prev, v);
    return Graph::from_edges(next, e);
}

}  // namespace percolour
