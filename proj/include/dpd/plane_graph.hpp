#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dpd/errors.hpp"

namespace dpd {

// A face as traced from the rotation system: the boundary walk in dart order.
// For 2-connected graphs the walk is a simple cycle; bridges make vertices
// repeat, which is legal and handled throughout.
struct Face {
    std::vector<int> boundary;
    int degree() const { return static_cast<int>(boundary.size()); }
};

struct VertexStats {
    int degree = 0;
    bool is_internal = false;
    int t = 0; // number of incident 3-faces
};

// Combinatorial plane graph: a simple connected graph given by per-vertex
// clockwise rotations.  Faces are traced from darts ((u,v) -> (v, succ_v(u)));
// planarity is certified by the Euler check V - E + F = 2, and the designated
// outer face D must appear among the traced faces.  Immutable after build.
class PlaneGraph {
public:
    static PlaneGraph build(int n, std::vector<std::vector<int>> rotations,
                            const std::vector<int>& outer_walk);

    // Convenience builder for straight-line drawings: rotations are derived
    // by sorting each vertex's neighbors clockwise by angle.  The drawing
    // must be crossing-free; the Euler check rejects anything else.
    static PlaneGraph build_from_coordinates(
        const std::vector<std::pair<double, double>>& coords,
        const std::vector<std::pair<int, int>>& edges,
        const std::vector<int>& outer_walk);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int outer_face() const { return outer_; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const Face& face(int f) const { return faces_[f]; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<int>& rotation(int v) const { return rotations_[v]; }

    int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return rotations_[v]; }

    bool on_outer_face(int v) const { return on_outer_[v]; }
    bool is_internal_vertex(int v) const { return !on_outer_[v]; }
    VertexStats vertex_stats(int v) const;

    // Faces incident to v, in rotation order (face between rotation[i] and
    // rotation[i+1]).
    std::vector<int> faces_incident(int v) const;
    // Faces sharing at least one edge with f (f itself excluded).
    std::vector<int> adjacent_faces(int f) const;
    bool is_internal_face(int f) const;

    // The faces on the two sides of edge uv.
    std::pair<int, int> edge_faces(int u, int v) const;

    // All 3-cycles with nonempty interior and exterior.  A triangle separates
    // iff it is not the boundary of a face (simple graph: an empty side of a
    // 3-cycle forces a 3-face there).
    std::vector<std::array<int, 3>> separating_3_cycles() const;

    // All 3-cycles, as sorted triples.
    std::vector<std::array<int, 3>> triangles() const;

    int face_of_dart(int u, int v) const; // face on the trace through dart u->v

private:
    int n_ = 0;
    std::vector<std::vector<int>> rotations_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Face> faces_;
    int outer_ = -1;
    std::vector<bool> on_outer_;
    // dart (u, idx of v in rot_[u]) -> face id
    std::vector<std::vector<int>> dart_face_;
};

} // namespace dpd
