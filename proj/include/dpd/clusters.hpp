#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpd/plane_graph.hpp"

namespace dpd {

enum class ClusterKind { C1, C2, C3, C4 };

std::string to_string(ClusterKind k);

// A connected component of G*: the adjacency graph of bounded 3-faces, two
// faces adjacent iff they share an edge.  Role vertices follow the figure:
//   C1: u1,u2,u3 the triangle;
//   C2: u1,u3 the shared edge, u2,u4 the tips;
//   C3: u1 the hub, u2..u5 the rim path;
//   C4: u1 the 4-valent center, u2..u5 the rim cycle.
struct Cluster {
    std::vector<int> faces;
    ClusterKind kind;
    std::vector<int> roles; // u1.. as vertex ids
    bool is_internal = false;

    const std::vector<int>& vertices() const { return vertices_; }
    std::vector<int> vertices_;
};

// Raw G* components (face id lists), before classification.
std::vector<std::vector<int>> cluster_components(const PlaneGraph& g);

// Classify one component; nullopt when the shape is not among C1..C4.
std::optional<Cluster> classify_cluster(const PlaneGraph& g,
                                        const std::vector<int>& faces);

// All clusters; throws UnclassifiableCluster when some component matches no
// shape (the input then violates the paper's hypotheses).
std::vector<Cluster> clusters(const PlaneGraph& g);

} // namespace dpd
