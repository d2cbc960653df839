#pragma once

#include <string>
#include <utility>
#include <vector>

#include "percolour/properties.hpp"

namespace percolour {

struct SurveySpec {
    // Family shorthands; a trailing "a..b" range on the last parameter
    // expands to one entry per value, e.g. "cycle:3..12".
    std::vector<std::string> families;
    int random_count = 0;
    int random_max_n = 8;
    int random_max_m = 10;
    unsigned seed = 0;
};

/// Expands the spec into concrete graphs. Random entries draw (n, m) and the
/// edge set from a generator seeded by `seed`, so the corpus is reproducible.
std::vector<CorpusEntry> build_corpus(const SurveySpec& spec);

/// Single corpus entry for one family instance, with its declared kind.
CorpusEntry corpus_entry(const FamilySpec& spec);

/// The corpus used when the CLI is given no explicit one: every named family
/// at desk scale, assorted fixtures, and 60 random connected graphs.
std::vector<CorpusEntry> default_corpus(unsigned seed);

/// Two branch vertices joined by three internally disjoint paths of the
/// given lengths (at most one may be 1). Test fixture, not a paper family.
Graph make_theta(int a, int b, int c);

struct PredicateSummary {
    std::string name;
    int applied = 0;
    int passed = 0;
    int skipped = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // (entry name, detail)
};

struct SurveyReport {
    int corpus_size = 0;
    std::vector<PredicateSummary> predicates;

    bool all_pass() const;
};

SurveyReport run_survey(const std::vector<CorpusEntry>& corpus);

std::string render_text(const SurveyReport& report);
std::string render_json(const SurveyReport& report);

}  // namespace percolour
