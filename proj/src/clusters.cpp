#include "dpd/clusters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dpd {

std::string to_string(ClusterKind k) {
    switch (k) {
        case ClusterKind::C1: return "C1";
        case ClusterKind::C2: return "C2";
        case ClusterKind::C3: return "C3";
        case ClusterKind::C4: return "C4";
    }
    return "?";
}

namespace {

std::set<int> face_vertex_set(const PlaneGraph& g, int f) {
    const auto& b = g.face(f).boundary;
    return std::set<int>(b.begin(), b.end());
}

std::set<std::pair<int, int>> face_edge_set(const PlaneGraph& g, int f) {
    std::set<std::pair<int, int>> out;
    const auto& b = g.face(f).boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
        int u = b[i], v = b[(i + 1) % b.size()];
        out.insert({std::min(u, v), std::max(u, v)});
    }
    return out;
}

} // namespace

std::vector<std::vector<int>> cluster_components(const PlaneGraph& g) {
    std::vector<int> tri_faces;
    for (int f = 0; f < g.face_count(); ++f)
        if (f != g.outer_face() && g.face(f).degree() == 3) tri_faces.push_back(f);

    // union-find over triangular faces, joined on shared edges
    std::map<int, int> parent;
    for (int f : tri_faces) parent[f] = f;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int f : tri_faces)
        for (auto e : face_edge_set(g, f)) by_edge[e].push_back(f);
    for (auto& [e, fs] : by_edge)
        for (std::size_t i = 1; i < fs.size(); ++i)
            parent[find(fs[0])] = find(fs[i]);

    std::map<int, std::vector<int>> comps;
    for (int f : tri_faces) comps[find(f)].push_back(f);
    std::vector<std::vector<int>> out;
    for (auto& [root, fs] : comps) {
        std::sort(fs.begin(), fs.end());
        out.push_back(fs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Cluster> classify_cluster(const PlaneGraph& g,
                                        const std::vector<int>& faces) {
    Cluster c;
    c.faces = faces;
    std::set<int> verts;
    for (int f : faces) {
        auto vs = face_vertex_set(g, f);
        if (vs.size() != 3) return std::nullopt;
        verts.insert(vs.begin(), vs.end());
    }
    c.vertices_.assign(verts.begin(), verts.end());
    c.is_internal = std::all_of(c.vertices_.begin(), c.vertices_.end(),
                                [&](int v) { return g.is_internal_vertex(v); });

    const std::size_t m = faces.size();
    if (m == 1) {
        c.kind = ClusterKind::C1;
        c.roles = c.vertices_;
        return c;
    }

    // shared edges between member faces
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> shared; // face pair -> edges
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto ei = face_edge_set(g, faces[i]);
            auto ej = face_edge_set(g, faces[j]);
            std::set<std::pair<int, int>> inter;
            std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(),
                                  std::inserter(inter, inter.begin()));
            if (!inter.empty()) shared[{faces[i], faces[j]}] = inter;
        }

    if (m == 2) {
        auto it = shared.begin();
        if (it == shared.end() || it->second.size() != 1) return std::nullopt;
        auto fs1 = face_vertex_set(g, faces[0]);
        auto fs2 = face_vertex_set(g, faces[1]);
        std::set<int> common;
        std::set_intersection(fs1.begin(), fs1.end(), fs2.begin(), fs2.end(),
                              std::inserter(common, common.begin()));
        if (common.size() != 2) return std::nullopt; // not normally adjacent
        auto [p, q] = *it->second.begin();
        int t1 = -1, t2 = -1;
        for (int v : fs1)
            if (v != p && v != q) t1 = v;
        for (int v : fs2)
            if (v != p && v != q) t2 = v;
        if (t2 < t1) std::swap(t1, t2);
        c.kind = ClusterKind::C2;
        c.roles = {p, t1, q, t2}; // u1, u2, u3, u4 with u1u3 the shared edge
        return c;
    }

    if (m == 3 || m == 4) {
        // common vertex of all member faces
        std::set<int> common = face_vertex_set(g, faces[0]);
        for (std::size_t i = 1; i < m; ++i) {
            auto vs = face_vertex_set(g, faces[i]);
            std::set<int> next;
            std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(),
                                  std::inserter(next, next.begin()));
            common = next;
        }
        if (common.size() != 1) return std::nullopt;
        int hub = *common.begin();

        // G* shape: count shared-edge pairs. A fan of k faces has k-1 pairs,
        // the wheel has 4.
        std::size_t pairs = shared.size();
        if (m == 3) {
            if (pairs != 2) return std::nullopt; // K4-like triple or worse
            // order faces along the path
            std::map<int, int> deg;
            for (auto& [fp, e] : shared) { ++deg[fp.first]; ++deg[fp.second]; }
            int first = -1;
            for (int f : faces)
                if (deg[f] == 1) first = f;
            if (first == -1) return std::nullopt;
            std::vector<int> chain = {first};
            std::set<int> used = {first};
            while (chain.size() < m) {
                int cur = chain.back(), nxt = -1;
                for (auto& [fp, e] : shared) {
                    if (fp.first == cur && !used.count(fp.second)) nxt = fp.second;
                    if (fp.second == cur && !used.count(fp.first)) nxt = fp.first;
                }
                if (nxt == -1) return std::nullopt;
                chain.push_back(nxt);
                used.insert(nxt);
            }
            // rim path a-b-c-d: T0 = {hub,a,b}, T1 = {hub,b,c}, T2 = {hub,c,d}
            auto t0 = face_vertex_set(g, chain[0]);
            auto t1 = face_vertex_set(g, chain[1]);
            auto t2 = face_vertex_set(g, chain[2]);
            auto pick = [&](const std::set<int>& in, const std::set<int>& notin,
                            int skip) {
                for (int v : in)
                    if (v != hub && v != skip && !notin.count(v)) return v;
                return -1;
            };
            auto pick_in = [&](const std::set<int>& x, const std::set<int>& y) {
                for (int v : x)
                    if (v != hub && y.count(v)) return v;
                return -1;
            };
            int b = pick_in(t0, t1);
            int cmid = pick_in(t1, t2);
            int a = pick(t0, t1, b);
            int d = pick(t2, t1, cmid);
            std::vector<int> rim = {a, b, cmid, d};
            if (a < 0 || b < 0 || cmid < 0 || d < 0) return std::nullopt;
            std::set<int> rimset(rim.begin(), rim.end());
            if (rimset.size() != 4 || rimset.count(hub)) return std::nullopt;
            if (rim.back() < rim.front()) std::reverse(rim.begin(), rim.end());
            c.kind = ClusterKind::C3;
            c.roles = {hub, rim[0], rim[1], rim[2], rim[3]};
            return c;
        }

        // m == 4: wheel requires a G* 4-cycle and a 4-valent center
        if (pairs != 4) return std::nullopt;
        if (g.degree(hub) != 4) return std::nullopt;
        // rim cycle = rotation around the hub
        std::vector<int> rim = g.rotation(hub);
        if (rim.size() != 4) return std::nullopt;
        // canonical start: smallest rim vertex, direction toward smaller next
        int start_idx = 0;
        for (int i = 1; i < 4; ++i)
            if (rim[i] < rim[start_idx]) start_idx = i;
        std::vector<int> fwd, bwd;
        for (int i = 0; i < 4; ++i) fwd.push_back(rim[(start_idx + i) % 4]);
        for (int i = 0; i < 4; ++i) bwd.push_back(rim[(start_idx - i + 4) % 4]);
        rim = (fwd[1] <= bwd[1]) ? fwd : bwd;
        c.kind = ClusterKind::C4;
        c.roles = {hub, rim[0], rim[1], rim[2], rim[3]};
        return c;
    }

    return std::nullopt;
}

std::vector<Cluster> clusters(const PlaneGraph& g) {
    std::vector<Cluster> out;
    for (const auto& comp : cluster_components(g)) {
        auto c = classify_cluster(g, comp);
        if (!c) {
            std::string faces;
            for (int f : comp) faces += std::to_string(f) + " ";
            fail("UnclassifiableCluster",
                 "component { " + faces + "} matches none of C1..C4");
        }
        out.push_back(std::move(*c));
    }
    return out;
}

} // namespace dpd
