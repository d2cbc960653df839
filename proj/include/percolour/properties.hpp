#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "percolour/families.hpp"
#include "percolour/graph.hpp"

namespace percolour {

/// One graph under test, with whatever metadata its generator declared.
struct CorpusEntry {
    std::string name;
    Graph graph;
    std::optional<GraphKind> declared_kind;
    ExpectedValues expected;
};

struct PredicateResult {
    enum class Status { pass, fail, skip };
    Status status = Status::skip;
    std::string detail;
};

/// A checkable statement about a single graph. Each predicate guards its own
/// applicability (structural preconditions, exactness caps, enumeration
/// cost) and reports skip when they fail.
struct TheoremPredicate {
    std::string name;
    std::function<PredicateResult(const CorpusEntry&)> check;
};

/// The full suite, in a fixed order.
const std::vector<TheoremPredicate>& theorem_predicates();

}  // namespace percolour
