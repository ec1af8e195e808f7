#include "dpd/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dpd {

namespace {

std::vector<std::string> wlabels(int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back("w" + std::to_string(i));
    return out;
}

Pattern make_pattern(std::string id, std::vector<std::string> labels,
                     std::vector<std::pair<int, int>> edges,
                     std::vector<std::pair<int, int>> non_edges,
                     std::vector<int> degree, std::vector<bool> in_k,
                     bool internal_only);

// Figure data.  Indices follow the paper's w-labels (w1 -> 0, ...); hollow
// context vertices come after the labeled ones.
std::map<std::string, Pattern> build_table() {
    std::map<std::string, Pattern> t;
    auto add = [&](Pattern p) { t[p.id] = std::move(p); };

    // RC-1: fan of three 3-faces, hub w4; w2 is the 5-vertex.
    add(make_pattern(
        "rc1", wlabels(5),
        {{0, 1}, {1, 2}, {4, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 4}},
        {{1, 4}, {2, 4}},
        {4, 5, 4, 4, 4}, std::vector<bool>(5, true), true));

    // RC-2(a): two diamonds tip-to-tip at the 5-vertex w3.
    add(make_pattern(
        "rc2a", wlabels(7),
        {{1, 2}, {2, 5}, {5, 6}, {6, 0}, {0, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 5}, {1, 3}},
        {{2, 4}, {6, 1}, {6, 2}, {6, 3}, {6, 4}},
        {4, 4, 5, 4, 4, 4, 4}, std::vector<bool>(7, true), true));

    // RC-2(b): diamond tip plus diamond hinge at the 5-vertex w4.
    add(make_pattern(
        "rc2b", wlabels(7),
        {{2, 3}, {3, 5}, {5, 6}, {6, 0}, {0, 3}, {3, 4}, {4, 1}, {1, 2}, {0, 5}, {3, 1}},
        {{2, 4}, {6, 1}, {6, 2}, {6, 3}, {6, 4}},
        {4, 4, 4, 5, 4, 4, 4}, std::vector<bool>(7, true), true));

    // RC-3(a): fan (hub w6) with a diamond hinged at the rim end w7.
    add(make_pattern(
        "rc3a", wlabels(8),
        {{5, 6}, {5, 2}, {5, 3}, {5, 4}, {6, 2}, {2, 3}, {3, 4},
         {6, 1}, {1, 0}, {0, 7}, {7, 6}, {6, 0}},
        {{3, 6}, {4, 6}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}},
        {4, 4, 4, 5, 4, 4, 5, 4}, std::vector<bool>(8, true), true));

    // RC-3(b): fan (hub w5) with a diamond tipped at the rim end w6.
    add(make_pattern(
        "rc3b", wlabels(8),
        {{4, 5}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {1, 2}, {2, 3},
         {0, 7}, {7, 6}, {6, 5}, {5, 0}, {0, 6}},
        {{2, 5}, {3, 5}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}},
        {4, 4, 5, 4, 4, 5, 4, 4}, std::vector<bool>(8, true), true));

    // RC-3(c): fan (hub w7, 5-vertex mid-rim w2) with a diamond hinged at w5.
    add(make_pattern(
        "rc3c", wlabels(8),
        {{6, 7}, {6, 4}, {6, 1}, {6, 0}, {4, 1}, {1, 0}, {0, 7},
         {3, 2}, {2, 5}, {5, 4}, {4, 3}, {4, 2}},
        {{3, 5}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}},
        {4, 5, 4, 4, 5, 4, 4, 4}, std::vector<bool>(8, true), true));

    // RC-3(d): fan (hub w7) with a diamond tipped at w4.
    add(make_pattern(
        "rc3d", wlabels(8),
        {{6, 7}, {6, 3}, {6, 1}, {6, 0}, {3, 1}, {1, 0}, {0, 7},
         {2, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 4}},
        {{3, 5}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}},
        {4, 5, 4, 5, 4, 4, 4, 4}, std::vector<bool>(8, true), true));

    // RC-6(a): fan (hub w8) with diamonds hinged at both rim ends w9, w7.
    add(make_pattern(
        "rc6a", wlabels(11),
        {{7, 8}, {7, 4}, {7, 5}, {7, 6}, {8, 4}, {4, 5}, {5, 6},
         {3, 2}, {2, 9}, {9, 8}, {8, 3}, {8, 2},
         {1, 0}, {0, 10}, {10, 6}, {6, 1}, {0, 6}},
        {{5, 8}, {6, 8},
         {10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 5}, {10, 7}, {10, 8}, {10, 9},
         {9, 3}, {9, 4}, {9, 5}, {9, 6}},
        {4, 4, 4, 4, 4, 5, 5, 4, 5, 4, 4}, std::vector<bool>(11, true), true));

    // RC-6(b): fan (hub w7) with a wheel (center w9) at w8 and a diamond at w6.
    {
        std::vector<bool> ink(12, true);
        ink[11] = false; // hollow wheel-rim vertex
        std::vector<std::string> lab = wlabels(11);
        lab.push_back("o1");
        add(make_pattern(
            "rc6b", lab,
            {{6, 7}, {6, 3}, {6, 4}, {6, 5}, {7, 3}, {3, 4}, {4, 5},
             {8, 2}, {8, 9}, {8, 11}, {8, 7}, {7, 2}, {2, 9}, {9, 11}, {11, 7},
             {1, 0}, {0, 10}, {10, 5}, {5, 1}, {0, 5}},
            {{4, 7}, {5, 7},
             {10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 6}, {10, 7}, {10, 8}, {10, 9},
             {9, 3}, {9, 4}, {9, 5}, {9, 6}},
            {4, 4, 4, 4, 5, 5, 4, 5, 4, 4, 4, -1}, ink, true));
    }

    // RC-7(a): fan (hub w9) with a diamond at w10 and a wheel (center w7) at w6.
    {
        std::vector<bool> ink(12, true);
        ink[11] = false;
        std::vector<std::string> lab = wlabels(11);
        lab.push_back("o1");
        add(make_pattern(
            "rc7a", lab,
            {{8, 9}, {8, 2}, {8, 3}, {8, 5}, {9, 2}, {2, 3}, {3, 5},
             {1, 0}, {0, 10}, {10, 9}, {9, 1}, {9, 0},
             {6, 4}, {6, 7}, {6, 11}, {6, 5}, {5, 4}, {4, 7}, {7, 11}, {11, 5}},
            {{9, 3}, {9, 4}, {9, 5}, {9, 6}, {9, 7},
             {10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 5}, {10, 6}, {10, 7}, {10, 8}},
            {4, 4, 4, 5, 4, 5, 4, 4, 4, 5, 4, -1}, ink, true));
    }

    // RC-7(b): fan (hub w6) with wheels (centers w8, w10) at both rim ends.
    {
        std::vector<bool> ink(13, true);
        ink[11] = ink[12] = false;
        std::vector<std::string> lab = wlabels(11);
        lab.push_back("o1");
        lab.push_back("o2");
        add(make_pattern(
            "rc7b", lab,
            {{5, 6}, {5, 2}, {5, 3}, {5, 4}, {6, 2}, {2, 3}, {3, 4},
             {7, 6}, {7, 1}, {7, 8}, {7, 11}, {6, 1}, {1, 8}, {8, 11}, {11, 6},
             {9, 4}, {9, 0}, {9, 10}, {9, 12}, {4, 0}, {0, 10}, {10, 12}, {12, 4}},
            {{8, 2}, {8, 3}, {8, 4}, {8, 5}, {8, 6},
             {10, 1}, {10, 2}, {10, 3}, {10, 4}, {10, 5}, {10, 6}, {10, 7}, {10, 8}},
            {4, 4, 4, 5, 5, 4, 5, 4, 4, 4, 4, -1, -1}, ink, true));
    }

    // K4 as a plain subgraph.
    add(make_pattern(
        "k4", {"a", "b", "c", "d"},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
        {}, {-1, -1, -1, -1}, std::vector<bool>(4, true), false));

    // Internal 4-regular diamond (K4 minus an edge with all degrees 4 in G).
    add(make_pattern(
        "diamond4", {"a", "b", "c", "d"},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
        {}, {4, 4, 4, 4}, std::vector<bool>(4, true), true));

    // Forbidden configuration (c): a wheel of four 3-faces with three fans
    // attached at three of its rim vertices; 17-vertex plain subgraph.
    {
        std::vector<std::string> lab = {"hub", "e", "n", "w", "s",
                                        "eo", "e1", "e2", "e3",
                                        "no", "n1", "n2", "n3",
                                        "wo", "w1", "w2", "w3"};
        add(make_pattern(
            "forbid-c", lab,
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1},
             {5, 1}, {5, 6}, {5, 7}, {5, 8}, {1, 6}, {6, 7}, {7, 8},
             {9, 2}, {9, 10}, {9, 11}, {9, 12}, {2, 10}, {10, 11}, {11, 12},
             {13, 3}, {13, 14}, {13, 15}, {13, 16}, {3, 14}, {14, 15}, {15, 16}},
            {}, std::vector<int>(17, -1), std::vector<bool>(17, true), false));
    }

    return t;
}

// Automorphisms preserve the graph, the degree marks, and the K-membership
// flags.  Caption non-edges are conditions on an occurrence, not structure:
// two label assignments of one occurrence that differ by a mark-preserving
// graph automorphism describe the same configuration, so the dedup group
// deliberately ignores them.
bool respects_marks(const Pattern& p, const std::vector<int>& perm) {
    for (int v = 0; v < p.k; ++v) {
        if (p.degree[v] != p.degree[perm[v]]) return false;
        if (p.in_k[v] != p.in_k[perm[v]]) return false;
    }
    std::set<std::pair<int, int>> e;
    for (auto [a, b] : p.edges) e.insert({std::min(a, b), std::max(a, b)});
    for (auto [a, b] : p.edges) {
        int x = perm[a], y = perm[b];
        if (!e.count({std::min(x, y), std::max(x, y)})) return false;
    }
    return true;
}

void compute_automorphisms(Pattern& p) {
    std::vector<std::vector<bool>> adj(p.k, std::vector<bool>(p.k, false));
    for (auto [a, b] : p.edges) adj[a][b] = adj[b][a] = true;
    std::vector<int> deg(p.k, 0);
    for (auto [a, b] : p.edges) { ++deg[a]; ++deg[b]; }

    std::vector<int> perm(p.k, -1);
    std::vector<bool> used(p.k, false);
    std::vector<std::vector<int>> autos;

    std::function<void(int)> rec = [&](int v) {
        if (v == p.k) {
            if (respects_marks(p, perm)) autos.push_back(perm);
            return;
        }
        for (int c = 0; c < p.k; ++c) {
            if (used[c] || deg[c] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adj[u][v] != adj[perm[u]][c]) ok = false;
            if (!ok) continue;
            perm[v] = c;
            used[c] = true;
            rec(v + 1);
            used[c] = false;
            perm[v] = -1;
        }
    };
    rec(0);
    std::sort(autos.begin(), autos.end());
    p.automorphisms = std::move(autos);
}

Pattern make_pattern(std::string id, std::vector<std::string> labels,
                     std::vector<std::pair<int, int>> edges,
                     std::vector<std::pair<int, int>> non_edges,
                     std::vector<int> degree, std::vector<bool> in_k,
                     bool internal_only) {
    Pattern p;
    p.id = std::move(id);
    p.labels = std::move(labels);
    p.k = static_cast<int>(p.labels.size());
    p.edges = std::move(edges);
    p.non_edges = std::move(non_edges);
    p.degree = std::move(degree);
    p.in_k = std::move(in_k);
    p.internal_only = internal_only;
    compute_automorphisms(p);
    return p;
}

const std::map<std::string, Pattern>& table() {
    static const std::map<std::string, Pattern> t = build_table();
    return t;
}

struct Matcher {
    const Pattern& p;
    int host_n;
    std::vector<std::vector<bool>> host_adj;
    std::vector<int> host_deg;
    bool check_internal;
    const std::vector<bool>* internal;

    std::vector<std::vector<int>> padj;
    std::vector<int> order;
    std::vector<int> map;
    std::vector<bool> used;
    std::vector<std::vector<int>> results;

    Matcher(const Pattern& pat, int n, const std::vector<std::pair<int, int>>& hedges,
            const std::vector<int>& deg_override, bool chk_internal,
            const std::vector<bool>& internal_flags)
        : p(pat), host_n(n), check_internal(chk_internal), internal(&internal_flags) {
        host_adj.assign(n, std::vector<bool>(n, false));
        host_deg.assign(n, 0);
        for (auto [u, v] : hedges) {
            if (!host_adj[u][v]) {
                host_adj[u][v] = host_adj[v][u] = true;
                ++host_deg[u];
                ++host_deg[v];
            }
        }
        if (!deg_override.empty()) host_deg = deg_override;

        padj.assign(p.k, {});
        for (auto [a, b] : p.edges) {
            padj[a].push_back(b);
            padj[b].push_back(a);
        }
        std::vector<bool> placed(p.k, false);
        int start = 0;
        for (int v = 1; v < p.k; ++v)
            if (padj[v].size() > padj[start].size()) start = v;
        order.push_back(start);
        placed[start] = true;
        while (static_cast<int>(order.size()) < p.k) {
            int best = -1, best_links = -1;
            for (int v = 0; v < p.k; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : padj[v])
                    if (placed[u]) ++links;
                if (links > best_links) { best_links = links; best = v; }
            }
            order.push_back(best);
            placed[best] = true;
        }
        map.assign(p.k, -1);
        used.assign(n, false);
    }

    bool final_checks() const {
        for (auto [a, b] : p.non_edges)
            if (host_adj[map[a]][map[b]]) return false;
        if (check_internal && p.internal_only)
            for (int v = 0; v < p.k; ++v)
                if (!(*internal)[map[v]]) return false;
        return true;
    }

    void rec(std::size_t idx) {
        if (idx == order.size()) {
            if (final_checks()) results.push_back(map);
            return;
        }
        int v = order[idx];
        for (int c = 0; c < host_n; ++c) {
            if (used[c]) continue;
            if (p.degree[v] >= 0 && host_deg[c] != p.degree[v]) continue;
            if (static_cast<int>(padj[v].size()) > host_deg[c]) continue;
            bool ok = true;
            for (int u : padj[v])
                if (map[u] != -1 && !host_adj[map[u]][c]) { ok = false; break; }
            if (!ok) continue;
            map[v] = c;
            used[c] = true;
            rec(idx + 1);
            used[c] = false;
            map[v] = -1;
        }
    }
};

std::vector<std::vector<int>> dedup_matches(const Pattern& p,
                                            std::vector<std::vector<int>> raw) {
    std::set<std::vector<int>> sigs;
    std::vector<std::vector<int>> out;
    for (auto& m : raw) {
        std::vector<int> best = m;
        for (const auto& a : p.automorphisms) {
            std::vector<int> img(p.k);
            for (int v = 0; v < p.k; ++v) img[v] = m[a[v]];
            if (img < best) best = img;
        }
        if (sigs.insert(best).second) out.push_back(best);
    }
    return out;
}

} // namespace

int Pattern::pattern_degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

int Pattern::stub_count(int v) const {
    if (degree[v] < 0) return 0;
    int d = 0;
    for (auto [a, b] : edges) {
        if (a == v && in_k[b]) ++d;
        if (b == v && in_k[a]) ++d;
    }
    return degree[v] - d;
}

const Pattern& pattern(const std::string& id) {
    auto it = table().find(id);
    if (it == table().end()) fail("UnknownPattern", "no pattern '" + id + "'");
    return it->second;
}

std::vector<std::string> pattern_ids() {
    std::vector<std::string> out;
    for (const auto& [id, p] : table()) out.push_back(id);
    return out;
}

std::vector<std::vector<int>> match_pattern_graph(
    const Pattern& p, int host_n, const std::vector<std::pair<int, int>>& host_edges,
    const std::vector<int>& host_degree_override, bool check_internal,
    const std::vector<bool>& internal) {
    if (p.k > host_n) return {};
    Matcher m(p, host_n, host_edges, host_degree_override, check_internal, internal);
    m.rec(0);
    return dedup_matches(p, std::move(m.results));
}

std::vector<PatternMatch> find_pattern(const PlaneGraph& g, const std::string& id) {
    const Pattern& p = pattern(id);
    std::vector<bool> internal(g.n());
    for (int v = 0; v < g.n(); ++v) internal[v] = g.is_internal_vertex(v);
    auto raw = match_pattern_graph(p, g.n(), g.edges(), {}, true, internal);

    std::vector<PatternMatch> out;
    for (auto& m : raw) {
        PatternMatch pm;
        pm.pattern_id = id;
        pm.vertex_map = m;
        for (auto [a, b] : p.non_edges)
            pm.side_conditions_checked.push_back(
                {p.labels[a] + p.labels[b] + " not in E(G)", true});
        if (p.internal_only)
            pm.side_conditions_checked.push_back({"internal configuration", true});
        out.push_back(std::move(pm));
    }
    return out;
}

std::vector<Chorded6> find_chorded_6_cycles_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> nbr(n);
    for (auto [u, v] : edges) {
        if (adj[u][v]) continue;
        adj[u][v] = adj[v][u] = true;
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    std::vector<Chorded6> out;
    std::array<int, 6> cyc{};
    std::vector<bool> used(n, false);

    std::function<void(int)> rec = [&](int depth) {
        if (depth == 6) {
            if (!adj[cyc[5]][cyc[0]]) return;
            if (cyc[1] > cyc[5]) return; // one direction per cycle
            for (int i = 0; i < 6; ++i)
                for (int j = i + 2; j < 6; ++j) {
                    if (i == 0 && j == 5) continue;
                    if (adj[cyc[i]][cyc[j]])
                        out.push_back({cyc, {std::min(cyc[i], cyc[j]),
                                             std::max(cyc[i], cyc[j])}});
                }
            return;
        }
        for (int v : nbr[cyc[depth - 1]]) {
            if (used[v] || v <= cyc[0]) continue;
            cyc[depth] = v;
            used[v] = true;
            rec(depth + 1);
            used[v] = false;
        }
    };

    for (int v0 = 0; v0 < n; ++v0) {
        cyc[0] = v0;
        used[v0] = true;
        rec(1);
        used[v0] = false;
    }
    return out;
}

std::vector<Chorded6> find_chorded_6_cycles(const PlaneGraph& g) {
    return find_chorded_6_cycles_edges(g.n(), g.edges());
}

} // namespace dpd
