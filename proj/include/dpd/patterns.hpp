#pragma once

#include <array>
#include <string>
#include <vector>

#include "dpd/plane_graph.hpp"

namespace dpd {

// A configuration to search for: a labeled graph with optional exact-degree
// marks (squares are 4-vertices, pentagons 5-vertices; hollow circles are
// unconstrained), required non-edges from the figure captions (neighborhood
// cardinality notes expand into non-edges), and an internality flag for the
// configurations the lemmas state as internal.  in_k marks the vertices that
// belong to the reducible configuration K itself; hollow context vertices are
// drawn in the figures but stay outside K.
struct Pattern {
    std::string id;
    int k = 0;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> non_edges;
    std::vector<int> degree; // exact degree in the host, or -1
    std::vector<bool> in_k;
    bool internal_only = false;
    std::vector<std::vector<int>> automorphisms; // computed once, identity first

    int pattern_degree(int v) const;
    int stub_count(int v) const; // degree[v] - (# in_k pattern neighbors)
};

const Pattern& pattern(const std::string& id);
std::vector<std::string> pattern_ids();

struct PatternMatch {
    std::string pattern_id;
    std::vector<int> vertex_map; // pattern index -> host vertex
    std::vector<std::pair<std::string, bool>> side_conditions_checked;
};

// All matches of the pattern in g, deduplicated modulo the pattern's
// automorphism group.  Matches honor edges, exact degrees, non-edges, and
// internality.
std::vector<PatternMatch> find_pattern(const PlaneGraph& g, const std::string& id);

// Same matcher over an abstract graph (no internality available); used by
// tests and the reducibility tooling.
std::vector<std::vector<int>> match_pattern_graph(
    const Pattern& p, int host_n,
    const std::vector<std::pair<int, int>>& host_edges,
    const std::vector<int>& host_degree_override = {},
    bool check_internal = false, const std::vector<bool>& internal = {});

struct Chorded6 {
    std::array<int, 6> cycle;     // canonical rotation: min vertex first
    std::pair<int, int> chord;    // one chord; short (distance 2) or long (3)
};

// Every 6-cycle on six distinct vertices together with each of its chords.
std::vector<Chorded6> find_chorded_6_cycles(const PlaneGraph& g);
std::vector<Chorded6> find_chorded_6_cycles_edges(
    int n, const std::vector<std::pair<int, int>>& edges);

} // namespace dpd
