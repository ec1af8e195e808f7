#include "dpd/reduce.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <mutex>
#include <thread>

namespace dpd {

namespace {

struct KContext {
    std::vector<int> kset;            // host ids in order
    std::map<int, int> pos;           // host id -> K index
    std::vector<int> d_g, d_k, stubs; // per K index
    std::vector<std::vector<int>> k_nbrs;
};

KContext k_context(const BaseGraph& g, const std::vector<int>& kset) {
    KContext c;
    c.kset = kset;
    for (std::size_t i = 0; i < kset.size(); ++i) {
        int v = kset[i];
        if (v < 0 || v >= g.n) fail("OrderNotBijective", "K vertex out of range");
        if (c.pos.count(v)) fail("OrderNotBijective", "repeated K vertex");
        c.pos[v] = static_cast<int>(i);
    }
    c.d_g.resize(kset.size());
    c.d_k.assign(kset.size(), 0);
    c.k_nbrs.resize(kset.size());
    for (std::size_t i = 0; i < kset.size(); ++i) {
        c.d_g[i] = g.degree(kset[i]);
        for (int u : g.neighbors(kset[i]))
            if (c.pos.count(u)) {
                ++c.d_k[i];
                c.k_nbrs[i].push_back(c.pos[u]);
            }
    }
    c.stubs.resize(kset.size());
    for (std::size_t i = 0; i < kset.size(); ++i) c.stubs[i] = c.d_g[i] - c.d_k[i];
    return c;
}

} // namespace

WwCheck check_ww_conditions(const BaseGraph& g, const std::vector<int>& kset,
                            const std::vector<std::pair<int, int>>& k_edges,
                            const ReductionOrder& order) {
    std::set<int> ks(kset.begin(), kset.end());
    std::set<std::pair<int, int>> induced, given;
    for (auto [u, v] : g.edges)
        if (ks.count(u) && ks.count(v)) induced.insert({std::min(u, v), std::max(u, v)});
    for (auto [u, v] : k_edges) given.insert({std::min(u, v), std::max(u, v)});
    if (induced != given)
        fail("NotInduced", "K is not an induced subgraph with the given edges");
    return check_ww_conditions(g, kset, order);
}

WwCheck check_ww_conditions(const BaseGraph& g, const std::vector<int>& kset,
                            const ReductionOrder& order) {
    WwCheck out;
    out.order = order;
    out.kset = kset;
    const int k = order.k;
    const int m = static_cast<int>(kset.size());
    KContext c = k_context(g, kset);

    if (static_cast<int>(order.vertices.size()) != m)
        fail("OrderNotBijective", "order length differs from |V(K)|");
    std::map<int, int> opos; // host vertex -> order position
    for (int i = 0; i < m; ++i) {
        int v = order.vertices[i];
        if (!c.pos.count(v)) fail("OrderNotBijective", "order vertex not in K");
        if (opos.count(v)) fail("OrderNotBijective", "repeated order vertex");
        opos[v] = i;
    }

    auto viol = [&](const std::string& cond, const std::string& detail) {
        out.pass = false;
        out.violated = cond;
        out.detail = detail;
        return out;
    };

    if (order.pairs.empty()) return viol("pairs", "at least one save pair required");
    // pairs must be nested intervals, outermost spanning the whole order
    std::vector<std::pair<int, int>> iv;
    for (auto [a, b] : order.pairs) {
        if (!opos.count(a) || !opos.count(b)) return viol("pairs", "pair vertex not in order");
        int pa = opos[a], pb = opos[b];
        if (pa >= pb) return viol("pairs", "pair first must precede its last");
        iv.push_back({pa, pb});
    }
    std::sort(iv.begin(), iv.end());
    if (iv[0] != std::make_pair(0, m - 1))
        return viol("pairs", "outermost pair must be (v1, vm)");
    for (std::size_t i = 1; i < iv.size(); ++i) {
        if (!(iv[i].first > iv[i - 1].first && iv[i].second < iv[i - 1].second))
            return viol("pairs", "pairs are not nested");
    }

    std::set<int> pair_first_pos, pair_last_pos;
    for (auto [a, b] : order.pairs) {
        pair_first_pos.insert(opos[a]);
        pair_last_pos.insert(opos[b]);
    }

    // (i) on the outermost pair, literally
    int v1 = order.vertices[0], vm = order.vertices[m - 1];
    int i1 = c.pos[v1], im = c.pos[vm];
    if (!(k - (c.d_g[i1] - c.d_k[i1]) > k - (c.d_g[im] - c.d_k[im])))
        return viol("i", "k - (dG(v1)-dK(v1)) is not greater than k - (dG(vm)-dK(vm))");

    // (ii) on every pair
    for (auto [a, b] : order.pairs) {
        if (c.d_g[c.pos[b]] > k)
            return viol("ii", "pair-last " + std::to_string(b) + " has dG > k");
        if (!g.has_edge(a, b))
            return viol("ii", "pair " + std::to_string(a) + "," + std::to_string(b) +
                                  " is not an edge of G");
    }

    // (iii): middles that are not pair-lasts have at most k-1 neighbors in
    // G minus the later vertices; inner pair-firsts keep two spare colors.
    for (int i = 1; i < m; ++i) {
        int v = order.vertices[i];
        if (pair_last_pos.count(i)) continue;
        std::set<int> later(order.vertices.begin() + i + 1, order.vertices.end());
        int blockers = 0;
        for (int u : g.neighbors(v))
            if (!later.count(u)) ++blockers;
        int cap = pair_first_pos.count(i) ? k - 2 : k - 1;
        if (blockers > cap)
            return viol("iii", "vertex " + std::to_string(v) + " at position " +
                                   std::to_string(i + 1) + " has " +
                                   std::to_string(blockers) + " early neighbors");
    }

    out.pass = true;
    return out;
}

std::optional<ReductionOrder> find_reduction_order(const BaseGraph& g,
                                                   const std::vector<int>& kset,
                                                   int max_pairs) {
    const int k = 4;
    const int m = static_cast<int>(kset.size());
    KContext c = k_context(g, kset);

    std::vector<int> order;
    std::vector<int> open;                     // stack of open pair firsts (K idx)
    std::vector<std::pair<int, int>> pairs;    // (first, last) as K idx
    std::vector<bool> placed(m, false);
    // failed states keyed by (placed set, open stack, pairs closed)
    std::set<std::tuple<std::vector<int>, std::vector<int>, int>> dead;

    std::function<bool(void)> rec = [&]() -> bool {
        int pos = static_cast<int>(order.size());
        if (pos == m) return open.empty() && !pairs.empty();

        std::vector<int> mask(placed.begin(), placed.end());
        auto key = std::make_tuple(mask, open, static_cast<int>(pairs.size()));
        if (dead.count(key)) return false;

        for (int v = 0; v < m; ++v) {
            if (placed[v]) continue;
            int blockers = c.stubs[v];
            for (int u : c.k_nbrs[v])
                if (placed[u]) ++blockers;

            // close the innermost open pair with v
            if (!open.empty()) {
                int a = open.back();
                bool is_outer = open.size() == 1;
                bool at_end = pos == m - 1;
                if (c.d_g[v] <= k &&
                    std::find(c.k_nbrs[v].begin(), c.k_nbrs[v].end(), a) !=
                        c.k_nbrs[v].end() &&
                    (is_outer ? at_end : !at_end)) {
                    bool cond_i = true;
                    if (is_outer) cond_i = c.stubs[a] < c.stubs[v];
                    if (cond_i) {
                        open.pop_back();
                        pairs.push_back({a, v});
                        placed[v] = true;
                        order.push_back(v);
                        if (rec()) return true;
                        order.pop_back();
                        placed[v] = false;
                        pairs.pop_back();
                        open.push_back(a);
                    }
                }
            }
            // open a new pair at v
            if (static_cast<int>(pairs.size() + open.size()) < max_pairs &&
                pos < m - 1 && (pos == 0 || blockers <= k - 2) &&
                (pos == 0 || !open.empty())) {
                // inner pairs only make sense inside the outermost one
                if (pos == 0 || !open.empty()) {
                    open.push_back(v);
                    placed[v] = true;
                    order.push_back(v);
                    if (rec()) return true;
                    order.pop_back();
                    placed[v] = false;
                    open.pop_back();
                }
            }
            // plain middle
            if (pos > 0 && pos < m - 1 && blockers <= k - 1) {
                placed[v] = true;
                order.push_back(v);
                if (rec()) return true;
                order.pop_back();
                placed[v] = false;
            }
        }
        dead.insert(key);
        return false;
    };

    if (rec()) {
        ReductionOrder ro;
        ro.k = k;
        for (int v : order) ro.vertices.push_back(c.kset[v]);
        for (auto [a, b] : pairs) ro.pairs.push_back({c.kset[a], c.kset[b]});
        // verify against the literal checker before returning
        auto chk = check_ww_conditions(g, kset, ro);
        if (chk.pass) return ro;
        fail("OrderSearchInternal", "search produced an order the checker rejects: " +
                                        chk.violated + " " + chk.detail);
    }
    return std::nullopt;
}

// ---- oracle ----------------------------------------------------------------

std::pair<BaseGraph, StubModel> pattern_k_graph(const Pattern& p) {
    int m = 0;
    for (int v = 0; v < p.k; ++v) {
        if (p.in_k[v]) {
            if (v != m) fail("PatternInternal", "in_k vertices must be a prefix");
            ++m;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : p.edges)
        if (a < m && b < m) edges.push_back({a, b});
    StubModel sm;
    for (int v = 0; v < m; ++v) sm.stub_count.push_back(p.stub_count(v));
    return {BaseGraph::make(m, edges), sm};
}

namespace {

long long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

std::vector<std::vector<int>> boundary_family(int s) {
    // values in {0,1,2} with sum 4 (the tight eta >= 4 boundary)
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == s) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(2, left); ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, 4);
    return out;
}

// Proper transversals of the current cover (f == 1 case): assignments with no
// matched pair of picks.  Encoded base-s, colors 0..s-1 encode 1..s.
// Proper transversals of the current cover (f == 1 case) generated in the
// given vertex order; code digit k is the color of order[k], base s.
void proper_transversals(const Cover& c, const std::vector<int>& order,
                         std::vector<int>& out) {
    out.clear();
    const int m = c.base.n, s = c.s;
    std::vector<int> pos(m);
    for (int k = 0; k < m; ++k) pos[order[k]] = k;
    std::vector<std::vector<std::pair<int, int>>> earlier(m); // per order pos
    for (std::size_t e = 0; e < c.base.edges.size(); ++e) {
        auto [u, v] = c.base.edges[e];
        int pu = pos[u], pv = pos[v];
        earlier[std::max(pu, pv)].push_back({static_cast<int>(e), std::min(pu, pv)});
    }
    std::vector<int> col(m, 0); // by order position
    std::function<void(int, int)> rec = [&](int k, int code) {
        if (k == m) {
            out.push_back(code);
            return;
        }
        for (int i = 1; i <= s; ++i) {
            bool ok = true;
            for (auto [e, kp] : earlier[k]) {
                int u = order[kp];
                int cu = col[kp];
                auto [a, b] = c.base.edges[e];
                int match = (a == u) ? c.fwd[e][cu] : c.bwd[e][cu];
                if (match == i) { ok = false; break; }
            }
            if (!ok) continue;
            col[k] = i;
            rec(k + 1, code * s + (i - 1));
            col[k] = 0;
        }
    };
    rec(0, 0);
}

// Adversary sweep over all kill patterns for one matching assignment, f == 1.
// Walks digits in order, branching over the kill set at each one and filtering
// the alive transversal list; at the last digit a covering kill set exists iff
// the digit's support fits the budget.  A subtree is safe outright when the
// alive list outnumbers everything the remaining budgets can still reach.
struct AdversarySweep {
    int m, s;
    std::vector<int> cap;                    // budget per order position
    std::vector<int> pw;                     // digit place weights
    std::vector<int> shift;                  // for power-of-two s
    bool pow2;
    std::vector<std::vector<int>> kill_sets; // chosen kill colors per level
    std::vector<std::vector<int>> scratch;   // alive list per level

    AdversarySweep(int m_, int s_, std::vector<int> cap_)
        : m(m_), s(s_), cap(std::move(cap_)), pw(m_), shift(m_), kill_sets(m_),
          scratch(m_ + 1) {
        pow2 = (s & (s - 1)) == 0;
        int bits = 0;
        while ((1 << bits) < s) ++bits;
        int w = 1;
        for (int k = m - 1; k >= 0; --k) {
            pw[k] = w;
            shift[k] = bits * (m - 1 - k);
            w *= s;
        }
    }

    int digit(int code, int k) const {
        return pow2 ? (code >> shift[k]) & (s - 1) : code / pw[k] % s;
    }

    // coverage the remaining budgets can still reach (single counting pass);
    // with B = total remaining budget, reach >= B * |alive| / s, so the test
    // can only fail once B is small -- callers skip it otherwise
    bool reachable(const std::vector<int>& alive, int k, long long need) {
        int cnt[16][8] = {};
        for (int code : alive)
            for (int j = k; j < m; ++j) ++cnt[j][digit(code, j)];
        long long reach = 0;
        for (int j = k; j < m; ++j) {
            if (cap[j] == 0) continue;
            std::sort(cnt[j], cnt[j] + s, std::greater<int>());
            for (int t = 0; t < cap[j]; ++t) reach += cnt[j][t];
            if (reach >= need) return true;
        }
        return false;
    }

    int budget_after(int k) const {
        int b = 0;
        for (int j = k; j < m; ++j) b += cap[j];
        return b;
    }

    bool covered(const std::vector<int>& alive, int k) {
        if (alive.empty()) {
            for (int j = k; j < m; ++j) kill_sets[j].clear();
            return true;
        }
        if (k == m - 1) {
            int seen[8] = {0};
            int support = 0;
            for (int code : alive) {
                int d = digit(code, k);
                if (!seen[d]) { seen[d] = 1; ++support; }
            }
            if (support > cap[k]) return false;
            kill_sets[k].clear();
            for (int d = 0; d < s; ++d)
                if (seen[d]) kill_sets[k].push_back(d);
            return true;
        }
        if ((budget_after(k) <= s || alive.size() <= 128) &&
            !reachable(alive, k, static_cast<long long>(alive.size())))
            return false;
        if (cap[k] == 0) {
            scratch[k + 1] = alive;
            return covered(scratch[k + 1], k + 1);
        }

        int subsets[6][2];
        int nsub = 0;
        if (cap[k] == 1) {
            for (int a = 0; a < s; ++a) subsets[nsub][0] = a, subsets[nsub][1] = -1, ++nsub;
        } else if (cap[k] == 2) {
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b)
                    subsets[nsub][0] = a, subsets[nsub][1] = b, ++nsub;
        } else {
            // general fallback (never hit by the shipped patterns: caps <= 2)
            fail("OracleInternal", "kill budget above 2 not implemented");
        }
        for (int t = 0; t < nsub; ++t) {
            auto& next = scratch[k + 1];
            next.clear();
            int a = subsets[t][0], b = subsets[t][1];
            for (int code : alive) {
                int d = digit(code, k);
                if (d != a && d != b) next.push_back(code);
            }
            if (covered(next, k + 1)) {
                kill_sets[k].clear();
                kill_sets[k].push_back(a);
                if (b >= 0) kill_sets[k].push_back(b);
                return true;
            }
        }
        return false;
    }
};


struct OracleRun {
    const Pattern& p;
    OracleOptions opt;
    BaseGraph kg;
    StubModel stubs;
    std::vector<int> tree, free_edges;

    OracleRun(const Pattern& pat, const OracleOptions& o) : p(pat), opt(o) {
        std::tie(kg, stubs) = pattern_k_graph(p);
        tree = spanning_tree_edges(kg);
        for (std::size_t e = 0; e < kg.edges.size(); ++e)
            if (std::find(tree.begin(), tree.end(), static_cast<int>(e)) == tree.end())
                free_edges.push_back(static_cast<int>(e));
    }

    long long kill_patterns_per_matching() const {
        long long out = 1;
        for (int v = 0; v < kg.n; ++v)
            out *= binom(opt.s, std::min(stubs.stub_count[v], opt.s));
        return out;
    }

    long long matchings_count() const {
        long long fact = 1;
        for (int i = 2; i <= opt.s; ++i) fact *= i;
        long long out = 1;
        for (std::size_t i = 0; i < free_edges.size(); ++i) {
            out *= fact;
            if (out > (1LL << 50)) return 1LL << 50;
        }
        return out;
    }

    OracleWitness make_witness(const Cover& cov, const std::vector<std::vector<int>>& dec,
                               const std::vector<std::vector<int>>& f) const {
        OracleWitness w;
        w.matching_pairs.resize(kg.edges.size());
        for (std::size_t e = 0; e < kg.edges.size(); ++e)
            for (int i = 1; i <= opt.s; ++i)
                if (cov.fwd[e][i] != 0) w.matching_pairs[e].push_back({i, cov.fwd[e][i]});
        w.stub_dec = dec;
        w.f = f;
        return w;
    }

    // Exhaustive f==1 sweep.  Dominance: partial matchings are refined by
    // permutations, stub misses by hits, repeated hits by spreading; so the
    // Exhaustive f==1 sweep.  Dominance: partial matchings are refined by
    // permutations, stub misses by hits, repeated hits by spreading; so the
    // sweep ranges over permutation assignments x full kill patterns, and the
    // per-matching adversary search decides all kill patterns at once.  One
    // further quotient: relabeling all lists simultaneously conjugates every
    // edge permutation, so the first free edge only ranges over conjugacy
    // class representatives, each weighted by its class size.
    OracleResult run_exhaustive() {
        OracleResult res;
        res.exhaustive = true;
        res.instances_planned = matchings_count() * kill_patterns_per_matching();
        const long long per_matching = kill_patterns_per_matching();

        // digit order: big budgets first shrink the alive list early; keep
        // one largest-budget vertex last for the support collapse
        std::vector<int> order(kg.n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return stubs.stub_count[a] > stubs.stub_count[b];
        });
        if (kg.n >= 2) {
            int second = order[1];
            order.erase(order.begin() + 1);
            order.push_back(second);
        }
        std::vector<int> cap(kg.n);
        for (int k = 0; k < kg.n; ++k)
            cap[k] = std::min(stubs.stub_count[order[k]], opt.s);

        // conjugacy class representatives of S4 on colors 1..4, with sizes
        struct Rep { std::vector<int> perm; long long weight; };
        std::vector<Rep> reps;
        if (!free_edges.empty()) {
            if (opt.s == 4) {
                reps.push_back({{0, 1, 2, 3, 4}, 1});  // id
                reps.push_back({{0, 2, 1, 3, 4}, 6});  // (12)
                reps.push_back({{0, 2, 1, 4, 3}, 3});  // (12)(34)
                reps.push_back({{0, 2, 3, 1, 4}, 8});  // (123)
                reps.push_back({{0, 2, 3, 4, 1}, 6});  // (1234)
            } else {
                std::vector<int> perm(opt.s + 1);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    reps.push_back({perm, 1});
                } while (std::next_permutation(perm.begin() + 1, perm.end()));
            }
        }

        struct Shared {
            std::atomic<long long> checked{0};
            std::atomic<int> verdict{0}; // 0 reducible, 1 cex, 2 exhausted
            std::mutex mtx;
            std::optional<OracleWitness> witness;
        } shared;

        auto work = [&](const Rep& rep) {
            Cover cov = Cover::identity(kg, opt.s);
            if (!free_edges.empty()) cov.set_edge_permutation(free_edges[0], rep.perm);
            std::vector<int> tcodes;
            AdversarySweep sweep(kg.n, opt.s, cap);

            std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
                if (shared.verdict.load(std::memory_order_relaxed) != 0) return false;
                if (idx == free_edges.size()) {
                    long long prev = shared.checked.fetch_add(per_matching * rep.weight);
                    if (prev + per_matching * rep.weight > opt.budget) {
                        shared.verdict.store(2);
                        return false;
                    }
                    proper_transversals(cov, order, tcodes);
                    if (sweep.covered(tcodes, 0)) {
                        std::vector<std::vector<int>> dec(kg.n,
                                                          std::vector<int>(opt.s, 0));
                        for (int k = 0; k < kg.n; ++k)
                            for (int d : sweep.kill_sets[k]) dec[order[k]][d] = 1;
                        std::vector<std::vector<int>> f(kg.n,
                                                        std::vector<int>(opt.s, 1));
                        std::lock_guard<std::mutex> lock(shared.mtx);
                        if (shared.verdict.load() != 1) {
                            shared.witness = make_witness(cov, dec, f);
                            shared.verdict.store(1);
                            if (replay_witness(p, opt.s, *shared.witness))
                                fail("OracleInternal",
                                     "adversary witness replays as solvable");
                        }
                        return false;
                    }
                    return true;
                }
                std::vector<int> perm(opt.s + 1);
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    cov.set_edge_permutation(free_edges[idx], perm);
                    if (!rec(idx + 1) &&
                        shared.verdict.load(std::memory_order_relaxed) != 0)
                        return false;
                } while (std::next_permutation(perm.begin() + 1, perm.end()));
                return true;
            };
            rec(free_edges.empty() ? 0 : 1);
        };

        if (reps.empty()) {
            // no free edges: single matching
            Rep unit{{}, 1};
            work(unit);
        } else if (opt.jobs <= 1) {
            for (const auto& rep : reps) work(rep);
        } else {
            std::vector<std::thread> threads;
            for (const auto& rep : reps) threads.emplace_back(work, rep);
            for (auto& th : threads) th.join();
        }

        res.instances_checked = std::min(shared.checked.load(), opt.budget);
        int v = shared.verdict.load();
        res.verdict = v == 1   ? Verdict::Counterexample
                      : v == 2 ? Verdict::Exhausted
                               : Verdict::Reducible;
        if (shared.witness) res.witness = shared.witness;
        if (res.verdict == Verdict::Reducible)
            res.instances_checked = res.instances_planned;
        return res;
    }

    OracleResult run_sampled() {
        OracleResult res;
        res.exhaustive = false;
        res.instances_planned = opt.budget;
        auto family = boundary_family(opt.s);
        const int jobs = std::max(1, opt.jobs);
        std::atomic<long long> done{0};
        std::atomic<bool> stop{false};
        std::vector<OracleResult> partial(jobs);
        std::vector<std::thread> threads;

        auto worker = [&](int tid) {
            std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + tid);
            std::uniform_int_distribution<int> color(1, opt.s);
            std::uniform_int_distribution<std::size_t> fpick(0, family.size() - 1);
            Cover cov = Cover::identity(kg, opt.s);
            std::vector<int> perm(opt.s + 1);
            while (!stop.load(std::memory_order_relaxed)) {
                long long ticket = done.fetch_add(1);
                if (ticket >= opt.budget) break;
                // random permutations on free edges
                for (int e : free_edges) {
                    std::iota(perm.begin(), perm.end(), 0);
                    std::shuffle(perm.begin() + 1, perm.end(), rng);
                    cov.set_edge_permutation(e, perm);
                }
                // weights
                std::vector<std::vector<int>> fv(kg.n);
                for (int v = 0; v < kg.n; ++v)
                    fv[v] = (opt.f_family == "ones")
                                ? std::vector<int>(opt.s, 1)
                                : family[fpick(rng)];
                // adversarial stubs: every stub hits a random color
                std::vector<std::vector<int>> dec(kg.n, std::vector<int>(opt.s, 0));
                for (int v = 0; v < kg.n; ++v)
                    for (int i = 0; i < stubs.stub_count[v]; ++i)
                        ++dec[v][color(rng) - 1];
                WeightFn f{fv};
                for (int v = 0; v < kg.n; ++v)
                    for (int i = 0; i < opt.s; ++i)
                        f.f[v][i] = std::max(0, f.f[v][i] - dec[v][i]);
                ++partial[tid].instances_checked;
                if (!extend_transversal(cov, f, Transversal::empty(kg.n))) {
                    partial[tid].verdict = Verdict::Counterexample;
                    partial[tid].witness = make_witness(cov, dec, fv);
                    stop.store(true);
                    break;
                }
            }
        };
        for (int tjob = 0; tjob < jobs; ++tjob) threads.emplace_back(worker, tjob);
        for (auto& th : threads) th.join();
        for (auto& pr : partial) {
            res.instances_checked += pr.instances_checked;
            if (pr.verdict == Verdict::Counterexample && !res.witness) {
                res.verdict = Verdict::Counterexample;
                res.witness = pr.witness;
            }
        }
        return res;
    }
};

} // namespace

bool replay_witness(const std::string& pattern_id, int s, const OracleWitness& w) {
    return replay_witness(pattern(pattern_id), s, w);
}

bool replay_witness(const Pattern& p, int s, const OracleWitness& w) {
    auto [kg, stubs] = pattern_k_graph(p);
    Cover cov = Cover::from_pairs(kg, s, w.matching_pairs);
    WeightFn f{w.f};
    for (int v = 0; v < kg.n; ++v)
        for (int i = 0; i < s; ++i)
            f.f[v][i] = std::max(0, f.f[v][i] - w.stub_dec[v][i]);
    return extend_transversal(cov, f, Transversal::empty(kg.n)).has_value();
}

OracleResult reducible_oracle(const std::string& pattern_id, const OracleOptions& opt) {
    return reducible_oracle(pattern(pattern_id), opt);
}

OracleResult reducible_oracle(const Pattern& p, const OracleOptions& opt) {
    OracleRun run(p, opt);
    if (opt.f_family != "ones" && opt.f_family != "boundary")
        fail("BadOptions", "f family must be 'ones' or 'boundary'");
    if (opt.mode == OracleMode::Exhaustive) {
        if (opt.f_family != "ones")
            fail("BadOptions", "exhaustive sweeps are defined for the ones family");
        return run.run_exhaustive();
    }
    if (opt.mode == OracleMode::Sampled) return run.run_sampled();
    if (opt.f_family == "ones") {
        long long planned =
            run.matchings_count() * run.kill_patterns_per_matching();
        if (planned <= opt.budget) return run.run_exhaustive();
    }
    return run.run_sampled();
}

// ---- paired extension -------------------------------------------------------

PairedExtension paired_extension(const Cover& cover_of_k, const WeightFn& f,
                                 const WwCheck& checked) {
    if (!checked.pass)
        fail("ConditionsNotChecked", "paired_extension requires a passed WW check");
    PairedExtension out;

    const auto& order = checked.order;
    const int m = static_cast<int>(order.vertices.size());
    // map host K ids to cover indices 0..m-1 via checked.kset
    std::map<int, int> idx;
    for (std::size_t i = 0; i < checked.kset.size(); ++i)
        idx[checked.kset[i]] = static_cast<int>(i);

    std::map<int, int> partner; // order position of first -> cover idx of last
    for (auto [a, b] : order.pairs) partner[idx.at(a)] = idx.at(b);

    // residual capacity of (v, i) given current picks
    Transversal t = Transversal::empty(cover_of_k.base.n);
    auto residual = [&](int v, int i) {
        int r = f.at(v, i);
        for (std::size_t e = 0; e < cover_of_k.base.edges.size(); ++e) {
            auto [a, b] = cover_of_k.base.edges[e];
            if (a == v && t.choice[b] != 0 && cover_of_k.bwd[e][t.choice[b]] == i) --r;
            if (b == v && t.choice[a] != 0 && cover_of_k.fwd[e][t.choice[a]] == i) --r;
        }
        return r;
    };
    auto match_into = [&](int v, int i, int w) -> int { // color of w matched to (v,i)
        for (std::size_t e = 0; e < cover_of_k.base.edges.size(); ++e) {
            auto [a, b] = cover_of_k.base.edges[e];
            if (a == v && b == w) return cover_of_k.fwd[e][i];
            if (a == w && b == v) return cover_of_k.bwd[e][i];
        }
        return 0;
    };

    bool stalled = false;
    for (int pos = 0; pos < m && !stalled; ++pos) {
        int v = idx.at(order.vertices[pos]);
        std::vector<std::pair<int, int>> cands; // (score, color) higher better
        bool is_first = partner.count(v) > 0;
        for (int i = 1; i <= cover_of_k.s; ++i) {
            int r = residual(v, i);
            if (r <= 0) continue;
            int score = r;
            if (is_first) {
                int w = partner.at(v);
                int j = match_into(v, i, w);
                // unmatched picks preserve the partner fully
                score = (j == 0 || residual(w, j) <= 0) ? 1000 + r : r;
            }
            cands.push_back({score, i});
        }
        if (cands.empty()) {
            out.stalled_at = pos;
            stalled = true;
            break;
        }
        std::sort(cands.rbegin(), cands.rend());
        t.choice[v] = cands[0].second;
    }

    if (!stalled) {
        out.greedy_succeeded = true;
        out.result = t;
        if (!is_strictly_f_degenerate(cover_of_k, f, t))
            fail("PairedExtensionInternal", "greedy result fails the degeneracy check");
        return out;
    }
    // fall back to exhaustive backtracking
    out.result = extend_transversal(cover_of_k, f, Transversal::empty(cover_of_k.base.n));
    if (out.result && !is_strictly_f_degenerate(cover_of_k, f, *out.result))
        fail("PairedExtensionInternal", "fallback result fails the degeneracy check");
    return out;
}

} // namespace dpd
