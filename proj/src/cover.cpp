#include "dpd/cover.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace dpd {

BaseGraph BaseGraph::make(int n, std::vector<std::pair<int, int>> edges) {
    BaseGraph g;
    g.n = n;
    std::set<std::pair<int, int>> eset;
    for (auto [u, v] : edges) {
        if (u == v) fail("NonSimple", "loop in base graph");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("NonSimple", "edge endpoint out of range");
        eset.insert({std::min(u, v), std::max(u, v)});
    }
    g.edges.assign(eset.begin(), eset.end());
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    return g;
}

bool BaseGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

Cover Cover::identity(const BaseGraph& g, int s) {
    Cover c;
    c.base = g;
    c.s = s;
    c.fwd.assign(g.edges.size(), std::vector<int>(s + 1, 0));
    c.bwd.assign(g.edges.size(), std::vector<int>(s + 1, 0));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        for (int i = 1; i <= s; ++i) { c.fwd[e][i] = i; c.bwd[e][i] = i; }
    return c;
}

Cover Cover::from_pairs(const BaseGraph& g, int s,
                        const std::vector<std::vector<std::pair<int, int>>>& pairs) {
    Cover c;
    c.base = g;
    c.s = s;
    c.fwd.assign(g.edges.size(), std::vector<int>(s + 1, 0));
    c.bwd.assign(g.edges.size(), std::vector<int>(s + 1, 0));
    if (pairs.size() != g.edges.size()) fail("BadCover", "pairs/edges size mismatch");
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        for (auto [i, j] : pairs[e]) {
            if (i < 1 || i > s || j < 1 || j > s)
                fail("BadCover", "color index out of range (1-based)");
            if (c.fwd[e][i] != 0 || c.bwd[e][j] != 0)
                fail("BadCover", "not a matching: repeated endpoint");
            c.fwd[e][i] = j;
            c.bwd[e][j] = i;
        }
    }
    return c;
}

void Cover::set_edge_permutation(int e, const std::vector<int>& perm) {
    clear_edge(e);
    for (int i = 1; i <= s; ++i) {
        int j = perm[i];
        fwd[e][i] = j;
        bwd[e][j] = i;
    }
}

void Cover::clear_edge(int e) {
    std::fill(fwd[e].begin(), fwd[e].end(), 0);
    std::fill(bwd[e].begin(), bwd[e].end(), 0);
}

WeightFn WeightFn::uniform(int n, int s, int value) {
    return WeightFn{std::vector<std::vector<int>>(n, std::vector<int>(s, value))};
}

int WeightFn::list_sum(int v) const {
    return std::accumulate(f[v].begin(), f[v].end(), 0);
}

bool Transversal::full() const {
    return std::all_of(choice.begin(), choice.end(), [](int c) { return c != 0; });
}

int Transversal::size() const {
    return static_cast<int>(std::count_if(choice.begin(), choice.end(),
                                          [](int c) { return c != 0; }));
}

namespace {

// Adjacency of H[T] restricted to picked vertices; deg[v] counts matched
// picked neighbors of (v, choice[v]).
struct InducedCover {
    std::vector<int> deg;
    std::vector<std::vector<int>> adj;

    InducedCover(const Cover& cover, const Transversal& t)
        : deg(cover.base.n, 0), adj(cover.base.n) {
        for (std::size_t e = 0; e < cover.base.edges.size(); ++e) {
            auto [u, v] = cover.base.edges[e];
            int cu = t.choice[u], cv = t.choice[v];
            if (cu == 0 || cv == 0) continue;
            if (cover.fwd[e][cu] == cv) {
                adj[u].push_back(v);
                adj[v].push_back(u);
                ++deg[u];
                ++deg[v];
            }
        }
    }
};

} // namespace

bool is_strictly_f_degenerate(const Cover& cover, const WeightFn& f,
                              const Transversal& t) {
    if (static_cast<int>(t.choice.size()) != cover.base.n)
        fail("InvalidTransversal", "choice size mismatch");
    for (int v = 0; v < cover.base.n; ++v)
        if (t.choice[v] < 0 || t.choice[v] > cover.s)
            fail("InvalidTransversal", "color out of range");

    InducedCover h(cover, t);
    std::vector<bool> alive(cover.base.n, false);
    std::queue<int> work;
    std::vector<bool> queued(cover.base.n, false);
    int alive_count = 0;
    for (int v = 0; v < cover.base.n; ++v) {
        if (t.choice[v] == 0) continue;
        alive[v] = true;
        ++alive_count;
        if (h.deg[v] < f.at(v, t.choice[v])) {
            work.push(v);
            queued[v] = true;
        }
    }
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        if (!alive[v]) continue;
        alive[v] = false;
        --alive_count;
        for (int u : h.adj[v]) {
            if (!alive[u]) continue;
            if (--h.deg[u] < f.at(u, t.choice[u]) && !queued[u]) {
                work.push(u);
                queued[u] = true;
            }
        }
    }
    return alive_count == 0;
}

namespace {

struct Extender {
    const Cover& cover;
    const WeightFn& f;
    Transversal cur;

    // Residual capacity heuristic only; correctness rests on the hereditary
    // strict-degeneracy check at every step.
    int residual(int v, int i) const {
        int r = f.at(v, i);
        for (std::size_t e = 0; e < cover.base.edges.size() && r > 0; ++e) {
            auto [a, b] = cover.base.edges[e];
            if (a == v && cur.choice[b] != 0 && cover.bwd[e][cur.choice[b]] == i) --r;
            else if (b == v && cur.choice[a] != 0 && cover.fwd[e][cur.choice[a]] == i) --r;
        }
        return r;
    }

    int pick_vertex() const {
        int best = -1, best_count = INT_MAX;
        for (int v = 0; v < cover.base.n; ++v) {
            if (cur.choice[v] != 0) continue;
            int cnt = 0;
            for (int i = 1; i <= cover.s; ++i)
                if (residual(v, i) > 0) ++cnt;
            if (cnt < best_count) { best_count = cnt; best = v; }
        }
        return best;
    }

    bool dfs() {
        int v = pick_vertex();
        if (v == -1) return true;
        std::vector<std::pair<int, int>> order; // (-residual, color)
        for (int i = 1; i <= cover.s; ++i)
            order.push_back({-residual(v, i), i});
        std::sort(order.begin(), order.end());
        for (auto [negr, i] : order) {
            cur.choice[v] = i;
            if (is_strictly_f_degenerate(cover, f, cur) && dfs()) return true;
            cur.choice[v] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Transversal> extend_transversal(const Cover& cover,
                                              const WeightFn& f,
                                              const Transversal& partial) {
    if (!is_strictly_f_degenerate(cover, f, partial))
        fail("InvalidPartial", "partial transversal is not strictly f-degenerate");
    Extender ext{cover, f, partial};
    if (ext.dfs()) return ext.cur;
    return std::nullopt;
}

std::vector<int> spanning_tree_edges(const BaseGraph& g) {
    std::vector<int> parent(g.n, -1);
    std::vector<bool> vis(g.n, false);
    std::vector<int> tree;
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    std::map<std::pair<int, int>, int> eidx;
    for (std::size_t e = 0; e < g.edges.size(); ++e) eidx[g.edges[e]] = static_cast<int>(e);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (vis[v]) continue;
            vis[v] = true;
            tree.push_back(eidx.at({std::min(u, v), std::max(u, v)}));
            q.push(v);
        }
    }
    return tree;
}

namespace {

// Enumerate permutation assignments for the given edges; visit(cover) for
// each.  Returns false if visit asked to stop (counterexample found).
bool for_each_permutation_assignment(Cover& cover, const std::vector<int>& free_edges,
                                     std::size_t idx,
                                     const std::function<bool(const Cover&)>& visit) {
    if (idx == free_edges.size()) return visit(cover);
    std::vector<int> perm(cover.s + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin() + 1, perm.end());
    do {
        cover.set_edge_permutation(free_edges[idx], perm);
        if (!for_each_permutation_assignment(cover, free_edges, idx + 1, visit))
            return false;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return true;
}

} // namespace

int dp_chromatic(const BaseGraph& g, const DpChromaticOptions& opt) {
    if (g.n > opt.n_max_guard)
        fail("TooLarge", "dp_chromatic guarded to <= " + std::to_string(opt.n_max_guard) +
                             " vertices");
    if (g.n == 1) return 1;

    auto tree = spanning_tree_edges(g);
    std::vector<int> free_edges;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (std::find(tree.begin(), tree.end(), static_cast<int>(e)) == tree.end())
            free_edges.push_back(static_cast<int>(e));

    for (int k = 1; k <= g.n; ++k) {
        Cover cover = Cover::identity(g, k);
        WeightFn f = WeightFn::uniform(g.n, k, 1);
        bool all_colorable = for_each_permutation_assignment(
            cover, free_edges, 0, [&](const Cover& c) {
                return extend_transversal(c, f, Transversal::empty(g.n)).has_value();
            });
        if (all_colorable) return k;
    }
    return g.n; // unreachable: identity covers at k = n are always colorable
}

std::pair<Cover, WeightFn> list_assignment_to_cover(
    const BaseGraph& g, const std::vector<std::vector<int>>& lists) {
    int s = 0;
    for (const auto& l : lists) s = std::max(s, static_cast<int>(l.size()));
    if (s == 0) fail("RaggedLists", "all lists empty");

    std::vector<std::vector<std::pair<int, int>>> pairs(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        for (std::size_t i = 0; i < lists[u].size(); ++i)
            for (std::size_t j = 0; j < lists[v].size(); ++j)
                if (lists[u][i] == lists[v][j])
                    pairs[e].push_back({static_cast<int>(i + 1), static_cast<int>(j + 1)});
    }
    Cover c = Cover::from_pairs(g, s, pairs);
    WeightFn f = WeightFn::uniform(g.n, s, 0);
    for (int v = 0; v < g.n; ++v)
        for (std::size_t i = 0; i < lists[v].size(); ++i) f.f[v][i] = 1;
    return {c, f};
}

} // namespace dpd
