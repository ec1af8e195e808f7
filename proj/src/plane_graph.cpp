#include "dpd/plane_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <cmath>

namespace dpd {

namespace {

// Does cyclic sequence a equal cyclic sequence b up to rotation or reflection?
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const int k = static_cast<int>(a.size());
    for (int dir : {+1, -1}) {
        for (int shift = 0; shift < k; ++shift) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int j = ((shift + dir * i) % k + k) % k;
                ok = a[i] == b[j];
            }
            if (ok) return true;
        }
    }
    return false;
}

} // namespace

PlaneGraph PlaneGraph::build(int n, std::vector<std::vector<int>> rotations,
                             const std::vector<int>& outer_walk) {
    if (n <= 0) fail("NonSimple", "vertex count must be positive");
    if (static_cast<int>(rotations.size()) != n)
        fail("NonSimple", "rotations size does not match n");

    PlaneGraph g;
    g.n_ = n;
    g.rotations_ = std::move(rotations);

    // Simplicity: no loops, no repeated neighbors, symmetric adjacency.
    std::set<std::pair<int, int>> eset;
    for (int u = 0; u < n; ++u) {
        std::set<int> seen;
        for (int v : g.rotations_[u]) {
            if (v < 0 || v >= n) fail("NonSimple", "neighbor id out of range");
            if (v == u) fail("NonSimple", "loop at vertex " + std::to_string(u));
            if (!seen.insert(v).second)
                fail("NonSimple", "repeated neighbor " + std::to_string(v) +
                                      " at vertex " + std::to_string(u));
            eset.insert({std::min(u, v), std::max(u, v)});
        }
    }
    for (auto [u, v] : eset) {
        auto& ru = g.rotations_[u];
        auto& rv = g.rotations_[v];
        bool uv = std::find(ru.begin(), ru.end(), v) != ru.end();
        bool vu = std::find(rv.begin(), rv.end(), u) != rv.end();
        if (!uv || !vu)
            fail("NonSimple", "one-sided adjacency " + std::to_string(u) + "-" +
                                  std::to_string(v));
    }
    g.edges_.assign(eset.begin(), eset.end());

    // Connectivity.
    {
        std::vector<bool> vis(n, false);
        std::queue<int> q;
        q.push(0);
        vis[0] = true;
        int cnt = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.rotations_[u])
                if (!vis[v]) { vis[v] = true; ++cnt; q.push(v); }
        }
        if (cnt != n) fail("Disconnected", "graph is not connected");
    }

    // Positions of u within rot[v], aligned with rot[u].
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i) pos[v][g.rotations_[v][i]] = i;

    // Trace faces: next dart after u->v is v->succ, where succ follows u in
    // the rotation at v.
    g.dart_face_.resize(n);
    for (int u = 0; u < n; ++u) g.dart_face_[u].assign(g.degree(u), -1);

    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < g.degree(u); ++i) {
            if (g.dart_face_[u][i] != -1) continue;
            int fid = static_cast<int>(g.faces_.size());
            Face face;
            int cu = u, ci = i;
            while (g.dart_face_[cu][ci] == -1) {
                g.dart_face_[cu][ci] = fid;
                face.boundary.push_back(cu);
                int cv = g.rotations_[cu][ci];
                int j = pos[cv].at(cu);
                int nj = (j + 1) % g.degree(cv);
                cu = cv;
                ci = nj;
            }
            g.faces_.push_back(std::move(face));
        }
    }

    // Euler certificate for a genus-0 embedding.
    long long V = n, E = static_cast<long long>(g.edges_.size()),
              F = static_cast<long long>(g.faces_.size());
    if (V - E + F != 2)
        fail("EulerViolation", "V-E+F = " + std::to_string(V - E + F) +
                                   ", not a planar embedding");

    // Bind the outer face.
    g.outer_ = -1;
    for (int f = 0; f < g.face_count(); ++f) {
        if (cyclic_equal(g.faces_[f].boundary, outer_walk)) { g.outer_ = f; break; }
    }
    if (g.outer_ == -1)
        fail("UnknownOuterFace", "outer walk does not match any traced face");

    g.on_outer_.assign(n, false);
    for (int v : g.faces_[g.outer_].boundary) g.on_outer_[v] = true;
    return g;
}

PlaneGraph PlaneGraph::build_from_coordinates(
    const std::vector<std::pair<double, double>>& coords,
    const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& outer_walk) {
    const int n = static_cast<int>(coords.size());
    std::vector<std::vector<int>> rot(n);
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto [x0, y0] = coords[v];
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            double aa = std::atan2(coords[a].second - y0, coords[a].first - x0);
            double ab = std::atan2(coords[b].second - y0, coords[b].first - x0);
            return aa > ab; // clockwise
        });
    }
    return build(n, std::move(rot), outer_walk);
}

bool PlaneGraph::has_edge(int u, int v) const {
    const auto& r = rotations_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int PlaneGraph::face_of_dart(int u, int v) const {
    const auto& r = rotations_[u];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) fail("NoSuchEdge", "no dart for missing edge");
    return dart_face_[u][it - r.begin()];
}

std::vector<int> PlaneGraph::faces_incident(int v) const {
    std::vector<int> out;
    std::set<int> seen;
    for (int i = 0; i < degree(v); ++i) {
        int f = dart_face_[v][i];
        if (seen.insert(f).second) out.push_back(f);
    }
    return out;
}

std::pair<int, int> PlaneGraph::edge_faces(int u, int v) const {
    return {face_of_dart(u, v), face_of_dart(v, u)};
}

std::vector<int> PlaneGraph::adjacent_faces(int f) const {
    std::set<int> out;
    const auto& b = faces_[f].boundary;
    const int k = static_cast<int>(b.size());
    for (int i = 0; i < k; ++i) {
        int u = b[i], v = b[(i + 1) % k];
        auto [f1, f2] = edge_faces(u, v);
        int other = (f1 == f) ? f2 : f1;
        if (other != f) out.insert(other);
    }
    return {out.begin(), out.end()};
}

bool PlaneGraph::is_internal_face(int f) const {
    if (f == outer_) return false;
    for (int v : faces_[f].boundary)
        if (on_outer_[v]) return false;
    return true;
}

VertexStats PlaneGraph::vertex_stats(int v) const {
    VertexStats s;
    s.degree = degree(v);
    s.is_internal = is_internal_vertex(v);
    for (int f : faces_incident(v))
        if (faces_[f].degree() == 3) ++s.t;
    return s;
}

std::vector<std::array<int, 3>> PlaneGraph::triangles() const {
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : edges_) {
        for (int w : rotations_[u]) {
            if (w <= v) continue;
            if (u < v && has_edge(v, w)) out.push_back({u, v, w});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::array<int, 3>> PlaneGraph::separating_3_cycles() const {
    // Collect vertex sets of 3-faces; a triangle bounds a face iff its vertex
    // set matches one of them (face degree 3 with three distinct vertices).
    std::set<std::array<int, 3>> facial;
    for (const auto& f : faces_) {
        if (f.degree() != 3) continue;
        std::array<int, 3> t{f.boundary[0], f.boundary[1], f.boundary[2]};
        std::sort(t.begin(), t.end());
        if (t[0] != t[1] && t[1] != t[2]) facial.insert(t);
    }
    std::vector<std::array<int, 3>> out;
    for (const auto& t : triangles())
        if (!facial.count(t)) out.push_back(t);
    return out;
}

} // namespace dpd
