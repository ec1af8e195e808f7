#include "dpd/random_gen.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <random>
#include <set>

#include "dpd/patterns.hpp"

namespace dpd {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a * 0x9e3779b97f4a7c15ULL + b + 0x7f4a7c15ULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
}

bool connected_without(const std::vector<std::set<int>>& adj, int n,
                       std::pair<int, int> removed) {
    std::vector<bool> vis(n, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if ((u == removed.first && v == removed.second) ||
                (u == removed.second && v == removed.first))
                continue;
            if (!vis[v]) { vis[v] = true; ++cnt; q.push(v); }
        }
    }
    return cnt == n;
}

} // namespace

PlaneGraph random_plane_graph(const GenOptions& opt, std::uint64_t index) {
    if (opt.n < 3) fail("BadOptions", "need at least the outer triangle");
    std::mt19937_64 rng(mix(opt.seed, index));

    // stacked triangulation with straight-line coordinates: inserting at the
    // centroid keeps the drawing crossing-free
    std::vector<std::pair<double, double>> coords = {{0, 0}, {4, 0}, {2, 3.46}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}}; // bounded faces
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}};

    for (int v = 3; v < opt.n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        std::size_t fi = pick(rng);
        auto [a, b, c] = faces[fi];
        coords.push_back({(coords[a].first + coords[b].first + coords[c].first) / 3,
                          (coords[a].second + coords[b].second + coords[c].second) / 3});
        edges.push_back({a, v});
        edges.push_back({b, v});
        edges.push_back({c, v});
        faces[fi] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }

    // random deletions preserving connectivity and the outer triangle
    std::vector<std::set<int>> adj(opt.n);
    for (auto [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    int deletions = opt.deletions;
    if (deletions < 0) {
        std::uniform_int_distribution<int> d(0, static_cast<int>(edges.size()) / 3);
        deletions = d(rng);
    }
    std::set<std::pair<int, int>> keep = {{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::pair<int, int>> candidates;
    for (auto e : edges)
        if (!keep.count({std::min(e.first, e.second), std::max(e.first, e.second)}))
            candidates.push_back(e);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    int done = 0;
    for (auto [u, v] : candidates) {
        if (done == deletions) break;
        if (!adj[u].count(v)) continue;
        if (!connected_without(adj, opt.n, {u, v})) continue;
        adj[u].erase(v);
        adj[v].erase(u);
        ++done;
    }
    std::vector<std::pair<int, int>> final_edges;
    for (int u = 0; u < opt.n; ++u)
        for (int v : adj[u])
            if (u < v) final_edges.push_back({u, v});
    return PlaneGraph::build_from_coordinates(coords, final_edges, {0, 1, 2});
}

bool passes_filters(const PlaneGraph& g, const std::vector<std::string>& filters) {
    for (const auto& f : filters) {
        if (f == "chorded6") {
            if (!find_chorded_6_cycles(g).empty()) return false;
        } else if (f == "fig4") {
            if (!find_pattern(g, "forbid-c").empty()) return false;
        } else if (f == "outer3") {
            if (g.face(g.outer_face()).degree() != 3) return false;
        } else {
            fail("BadOptions", "unknown filter '" + f + "'");
        }
    }
    return true;
}

std::vector<PlaneGraph> random_instances(const GenOptions& opt, int count,
                                         GenStats* stats) {
    std::vector<PlaneGraph> out;
    GenStats local;
    long long window_rejects = 0;
    for (std::uint64_t index = 0; static_cast<int>(out.size()) < count; ++index) {
        if (local.attempts++ > 4000LL * count + 10000) {
            local.filter_too_strict = true;
            break;
        }
        PlaneGraph g = random_plane_graph(opt, index);
        if (passes_filters(g, opt.filters)) {
            out.push_back(std::move(g));
            window_rejects = 0;
        } else {
            ++local.rejected;
            if (++window_rejects > 2000) local.filter_too_strict = true;
        }
    }
    if (stats) *stats = local;
    return out;
}

} // namespace dpd
