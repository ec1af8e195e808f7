#pragma once

#include <string>
#include <vector>

#include "dpd/clusters.hpp"
#include "dpd/plane_graph.hpp"

namespace dpd {

struct LintItem {
    std::string id;
    bool pass = true;
    std::vector<std::string> witnesses; // human-readable, one per violation
};

struct LintReport {
    std::vector<LintItem> items;

    bool all_pass() const;
    bool passes(const std::string& id) const;
    const LintItem& item(const std::string& id) const;
    // The hypotheses of the main theorem only: simple/connected (by
    // construction), no chorded 6-cycles, no forbidden wheel-with-fans
    // configuration, outer face a 3-cycle.
    bool theorem_hypotheses_pass() const;
};

// Evaluates every structural predicate literally and reports each with
// witnesses.  Never throws: unclassifiable clusters become a failing item.
LintReport lint_hypotheses(const PlaneGraph& g);

std::vector<std::string> lint_ids();

} // namespace dpd
