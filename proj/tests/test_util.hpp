#pragma once

// Shared fixtures and independent oracles for the test suites.  Oracles here
// are deliberately naive (enumeration, flood fill) and never call the
// implementation paths they check.

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "dpd/cover.hpp"
#include "dpd/plane_graph.hpp"

namespace testutil {

using dpd::BaseGraph;
using dpd::Cover;
using dpd::PlaneGraph;
using dpd::Transversal;
using dpd::WeightFn;

inline PlaneGraph k3() {
    return PlaneGraph::build(3, {{1, 2}, {0, 2}, {0, 1}}, {0, 1, 2});
}

inline PlaneGraph k4() {
    // 0,1,2 outer triangle, 3 in the middle.
    return PlaneGraph::build_from_coordinates(
        {{0, 2}, {2, -1}, {-2, -1}, {0, 0}},
        {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}, {0, 1, 2});
}

inline PlaneGraph octahedron() {
    // Outer triangle 0,1,2; inner triangle 3,4,5 (antiprism).
    return PlaneGraph::build_from_coordinates(
        {{0, 2}, {2, -1}, {-2, -1}, {0.6, 0.35}, {0, -0.7}, {-0.6, 0.35}},
        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
         {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}},
        {0, 1, 2});
}

inline PlaneGraph wheel5() {
    // 4-cycle 0..3 with hub 4; outer face is a triangle [0,1,4].
    return PlaneGraph::build_from_coordinates(
        {{0, 2}, {2, 0}, {0, -2}, {-2, 0}, {0, 0}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}},
        {0, 1, 4});
}

inline BaseGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return BaseGraph::make(n, e);
}

inline BaseGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return BaseGraph::make(n, e);
}

// ---- Oracle: separating 3-cycles by face flood fill -----------------------

// Regions of faces reachable without crossing the triangle's three edges;
// separating iff both regions own at least one non-triangle vertex.
inline bool oracle_is_separating(const PlaneGraph& g, std::array<int, 3> tri) {
    std::set<std::pair<int, int>> walls;
    auto add = [&](int a, int b) { walls.insert({std::min(a, b), std::max(a, b)}); };
    add(tri[0], tri[1]);
    add(tri[1], tri[2]);
    add(tri[2], tri[0]);

    auto [f0, f1] = g.edge_faces(tri[0], tri[1]);
    std::set<int> region;
    std::queue<int> q;
    q.push(f0);
    region.insert(f0);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& b = g.face(f).boundary;
        for (std::size_t i = 0; i < b.size(); ++i) {
            int u = b[i], v = b[(i + 1) % b.size()];
            if (walls.count({std::min(u, v), std::max(u, v)})) continue;
            auto [fa, fb] = g.edge_faces(u, v);
            int other = (fa == f) ? fb : fa;
            if (region.insert(other).second) q.push(other);
        }
    }
    std::set<int> tset(tri.begin(), tri.end());
    std::set<int> inside, outside;
    for (int f = 0; f < g.face_count(); ++f)
        for (int v : g.face(f).boundary) {
            if (tset.count(v)) continue;
            (region.count(f) ? inside : outside).insert(v);
        }
    return !inside.empty() && !outside.empty();
}

inline std::vector<std::array<int, 3>> oracle_separating_3_cycles(const PlaneGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (auto t : g.triangles())
        if (oracle_is_separating(g, t)) out.push_back(t);
    return out;
}

// ---- Oracle: literal strictly-f-degenerate check ---------------------------

// Enumerates every nonempty subset of the picked cover vertices and checks the
// paper's condition verbatim: some vertex of the induced subgraph has degree
// less than its f value.
inline bool oracle_strictly_f_degenerate(const Cover& cover, const WeightFn& f,
                                         const Transversal& t) {
    std::vector<int> picked;
    for (int v = 0; v < cover.base.n; ++v)
        if (t.choice[v] != 0) picked.push_back(v);
    const int m = static_cast<int>(picked.size());
    if (m > 20) throw std::runtime_error("oracle too large");

    // adjacency among picked
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    std::map<int, int> idx;
    for (int i = 0; i < m; ++i) idx[picked[i]] = i;
    for (std::size_t e = 0; e < cover.base.edges.size(); ++e) {
        auto [u, v] = cover.base.edges[e];
        if (!idx.count(u) || !idx.count(v)) continue;
        if (cover.fwd[e][t.choice[u]] == t.choice[v] && t.choice[u] != 0 && t.choice[v] != 0)
            adj[idx[u]][idx[v]] = adj[idx[v]][idx[u]] = true;
    }
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        bool ok = false;
        for (int i = 0; i < m && !ok; ++i) {
            if (!(mask >> i & 1)) continue;
            int deg = 0;
            for (int j = 0; j < m; ++j)
                if ((mask >> j & 1) && adj[i][j]) ++deg;
            ok = deg < f.at(picked[i], t.choice[picked[i]]);
        }
        if (!ok) return false;
    }
    return true;
}

// ---- Oracle: direct list-coloring backtracker ------------------------------

inline bool oracle_list_colorable(const BaseGraph& g,
                                  const std::vector<std::vector<int>>& lists,
                                  std::vector<int>& chosen, int v = 0) {
    if (v == g.n) return true;
    for (int c : lists[v]) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && chosen[u] == c) ok = false;
        if (!ok) continue;
        chosen[v] = c;
        if (oracle_list_colorable(g, lists, chosen, v + 1)) return true;
    }
    chosen[v] = -1;
    return false;
}

// Random cover over a random graph; used by the equivalence property tests.
inline std::pair<Cover, WeightFn> random_cover(std::mt19937_64& rng, int n, int s,
                                               double edge_p, int fmax) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_p) edges.push_back({i, j});
    BaseGraph g = BaseGraph::make(n, edges);
    Cover c = Cover::identity(g, s);
    // random partial matchings
    std::uniform_int_distribution<int> pick(0, s);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        c.clear_edge(static_cast<int>(e));
        std::vector<int> perm(s);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        int keep = pick(rng);
        for (int i = 1; i <= keep; ++i) {
            c.fwd[e][i] = perm[i - 1];
            c.bwd[e][perm[i - 1]] = i;
        }
    }
    WeightFn f = WeightFn::uniform(g.n, s, 0);
    std::uniform_int_distribution<int> fv(0, fmax);
    for (auto& row : f.f)
        for (auto& x : row) x = fv(rng);
    return {c, f};
}

} // namespace testutil
