#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpd/plane_graph.hpp"

namespace dpd {

// Random plane graphs: a stacked triangulation grown inside the outer
// triangle 0-1-2, followed by random edge deletions that keep the graph
// connected and the outer triangle intact.  Generation is a pure function of
// (seed, index); uniformity over planar graphs is explicitly not claimed.
struct GenOptions {
    int n = 10;                        // total vertex count (>= 3)
    std::uint64_t seed = 1;
    int deletions = -1;                // -1: random in [0, E/3]
    std::vector<std::string> filters;  // "chorded6", "fig4", "outer3"
};

// One raw (unfiltered) instance.
PlaneGraph random_plane_graph(const GenOptions& opt, std::uint64_t index);

bool passes_filters(const PlaneGraph& g, const std::vector<std::string>& filters);

struct GenStats {
    long long attempts = 0;
    long long rejected = 0;
    bool filter_too_strict = false; // rejection rate > 99.9% over a window
};

// The filtered stream: instance #k is the k-th raw index passing the filters.
std::vector<PlaneGraph> random_instances(const GenOptions& opt, int count,
                                         GenStats* stats = nullptr);

} // namespace dpd
