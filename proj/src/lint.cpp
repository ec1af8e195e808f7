#include "dpd/lint.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "dpd/patterns.hpp"

namespace dpd {

namespace {

std::string vstr(std::initializer_list<int> vs) {
    std::string s = "{";
    for (int v : vs) s += " " + std::to_string(v);
    return s + " }";
}

std::set<std::pair<int, int>> face_edges(const PlaneGraph& g, int f) {
    std::set<std::pair<int, int>> out;
    const auto& b = g.face(f).boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
        int u = b[i], v = b[(i + 1) % b.size()];
        out.insert({std::min(u, v), std::max(u, v)});
    }
    return out;
}

std::set<std::pair<int, int>> shared_edges(const PlaneGraph& g, int f, int h) {
    auto a = face_edges(g, f), b = face_edges(g, h);
    std::set<std::pair<int, int>> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

// Simple paths u -> v avoiding `forbidden`, recording which edge counts in
// {1..max_len} are achievable.
std::set<int> path_lengths(const PlaneGraph& g, int from, int to,
                           const std::set<int>& forbidden, int max_len) {
    std::set<int> found;
    std::vector<bool> used(g.n(), false);
    used[from] = true;
    std::function<void(int, int)> rec = [&](int at, int len) {
        if (at == to) {
            if (len >= 1) found.insert(len);
            return;
        }
        if (len == max_len) return;
        for (int w : g.neighbors(at)) {
            if (used[w] || forbidden.count(w)) continue;
            if (w == to) { found.insert(len + 1); continue; }
            used[w] = true;
            rec(w, len + 1);
            used[w] = false;
        }
    };
    rec(from, 0);
    return found;
}

// Faces adjacent to a cluster: share an edge with a member, not members.
std::set<int> cluster_adjacent_faces(const PlaneGraph& g, const Cluster& c) {
    std::set<int> members(c.faces.begin(), c.faces.end());
    std::set<int> out;
    for (int f : c.faces)
        for (int h : g.adjacent_faces(f))
            if (!members.count(h)) out.insert(h);
    return out;
}

} // namespace

bool LintReport::all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const LintItem& it) { return it.pass; });
}

bool LintReport::passes(const std::string& id) const { return item(id).pass; }

const LintItem& LintReport::item(const std::string& id) const {
    for (const auto& it : items)
        if (it.id == id) return it;
    fail("UnknownLint", "no lint item '" + id + "'");
}

bool LintReport::theorem_hypotheses_pass() const {
    return passes("outer-3-cycle") && passes("no-chorded-6-cycles") &&
           passes("no-forbid-c");
}

std::vector<std::string> lint_ids() {
    return {"outer-3-cycle",
            "no-chorded-6-cycles",
            "no-forbid-c",
            "no-separating-3-cycles",
            "internal-min-degree-4",
            "clusters-classifiable",
            "st-i-4-face-chordless",
            "st-ii-normal-adjacency",
            "st-iii-no-k4",
            "st-iv-no-adjacent-4-faces",
            "st-v-triangle-budget",
            "st-vi-5-3-shape",
            "st-vii-4-3-3-shape",
            "st-viii-c4-neighbors-6plus",
            "st-ix-c3-neighbors",
            "st-x-c2-neighbors",
            "st-xi-c4-rim-paths",
            "st-xii-c4-diagonal-paths",
            "st-xiii-c4c3-shared-5vertex",
            "st-xiv-c4-two-c3",
            "no-internal-4regular-diamond"};
}

LintReport lint_hypotheses(const PlaneGraph& g) {
    LintReport rep;
    auto& items = rep.items;
    auto add = [&](const std::string& id) -> LintItem& {
        items.push_back(LintItem{id});
        return items.back();
    };
    auto violate = [](LintItem& it, const std::string& w) {
        it.pass = false;
        it.witnesses.push_back(w);
    };

    const int D = g.outer_face();

    {
        auto& it = add("outer-3-cycle");
        std::set<int> vs(g.face(D).boundary.begin(), g.face(D).boundary.end());
        if (g.face(D).degree() != 3 || vs.size() != 3)
            violate(it, "outer face has degree " + std::to_string(g.face(D).degree()));
    }
    {
        auto& it = add("no-chorded-6-cycles");
        for (const auto& c : find_chorded_6_cycles(g)) {
            std::string w = "cycle";
            for (int v : c.cycle) w += " " + std::to_string(v);
            w += " chord " + std::to_string(c.chord.first) + "-" +
                 std::to_string(c.chord.second);
            violate(it, w);
        }
    }
    {
        auto& it = add("no-forbid-c");
        for (const auto& m : find_pattern(g, "forbid-c")) {
            std::string w = "map";
            for (int v : m.vertex_map) w += " " + std::to_string(v);
            violate(it, w);
        }
    }
    {
        auto& it = add("no-separating-3-cycles");
        for (auto t : g.separating_3_cycles())
            violate(it, "separating triangle " + vstr({t[0], t[1], t[2]}));
    }
    {
        auto& it = add("internal-min-degree-4");
        for (int v = 0; v < g.n(); ++v)
            if (g.is_internal_vertex(v) && g.degree(v) < 4)
                violate(it, "internal vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v)));
    }

    auto comps = cluster_components(g);
    std::vector<Cluster> cls;
    {
        auto& it = add("clusters-classifiable");
        for (const auto& comp : comps) {
            auto c = classify_cluster(g, comp);
            if (!c) {
                std::string w = "component of " + std::to_string(comp.size()) + " faces:";
                for (int f : comp) w += " " + std::to_string(f);
                violate(it, w);
            } else {
                cls.push_back(std::move(*c));
            }
        }
    }

    {
        auto& it = add("st-i-4-face-chordless");
        for (int f = 0; f < g.face_count(); ++f) {
            if (f == D || g.face(f).degree() != 4) continue;
            const auto& b = g.face(f).boundary;
            if (std::set<int>(b.begin(), b.end()).size() != 4) continue;
            if (g.has_edge(b[0], b[2]) || g.has_edge(b[1], b[3]))
                violate(it, "4-face " + std::to_string(f) + " has a chord");
        }
    }
    {
        auto& it = add("st-ii-normal-adjacency");
        for (int f = 0; f < g.face_count(); ++f) {
            if (g.face(f).degree() != 3) continue;
            for (int h : g.adjacent_faces(f)) {
                if (h <= f && g.face(h).degree() == 3) continue; // once per pair
                if (g.face(h).degree() > 4) continue;
                const auto& fb = g.face(f).boundary;
                const auto& hb = g.face(h).boundary;
                std::set<int> fv(fb.begin(), fb.end()), hv(hb.begin(), hb.end());
                std::set<int> common;
                std::set_intersection(fv.begin(), fv.end(), hv.begin(), hv.end(),
                                      std::inserter(common, common.begin()));
                if (common.size() != 2 || shared_edges(g, f, h).size() != 1)
                    violate(it, "faces " + std::to_string(f) + "," + std::to_string(h) +
                                    " are adjacent but not normally adjacent");
            }
        }
    }
    {
        auto& it = add("st-iii-no-k4");
        for (const auto& m : find_pattern(g, "k4")) {
            violate(it, "K4 on " + vstr({m.vertex_map[0], m.vertex_map[1],
                                         m.vertex_map[2], m.vertex_map[3]}));
        }
    }
    {
        auto& it = add("st-iv-no-adjacent-4-faces");
        for (int f = 0; f < g.face_count(); ++f) {
            if (g.face(f).degree() != 4 || f == D) continue;
            for (int h : g.adjacent_faces(f))
                if (h > f && h != D && g.face(h).degree() == 4)
                    violate(it, "adjacent 4-faces " + std::to_string(f) + "," +
                                    std::to_string(h));
        }
    }
    {
        auto& it = add("st-v-triangle-budget");
        for (int v = 0; v < g.n(); ++v) {
            if (!g.is_internal_vertex(v) || g.degree(v) < 5) continue;
            auto st = g.vertex_stats(v);
            if (st.t > 3 * st.degree / 4)
                violate(it, "vertex " + std::to_string(v) + " has t=" +
                                std::to_string(st.t) + " > floor(3d/4)");
        }
    }
    {
        auto& it = add("st-vi-5-3-shape");
        for (int f = 0; f < g.face_count(); ++f) {
            if (g.face(f).degree() != 5) continue;
            for (int h : g.adjacent_faces(f)) {
                if (g.face(h).degree() != 3) continue;
                bool ok = false;
                if (h == D) {
                    auto sh = shared_edges(g, f, h);
                    if (sh.size() == 2) {
                        std::map<int, int> cnt;
                        for (auto [a, b] : sh) { ++cnt[a]; ++cnt[b]; }
                        for (auto [v, c] : cnt)
                            if (c == 2 && g.degree(v) == 2) ok = true;
                    }
                }
                if (!ok)
                    violate(it, "5-face " + std::to_string(f) + " adjacent to 3-face " +
                                    std::to_string(h) + " outside the allowed shape");
            }
        }
    }
    {
        auto& it = add("st-vii-4-3-3-shape");
        for (int f = 0; f < g.face_count(); ++f) {
            if (f == D || g.face(f).degree() != 4) continue;
            std::vector<int> tris;
            for (int h : g.adjacent_faces(f))
                if (g.face(h).degree() == 3) tris.push_back(h);
            if (tris.size() > 2) {
                violate(it, "4-face " + std::to_string(f) + " adjacent to " +
                                std::to_string(tris.size()) + " 3-faces");
            } else if (tris.size() == 2) {
                // allowed only as: triangles [y,a,u],[y,b,u] on consecutive
                // edges of the 4-face at a 3-vertex y of the outer cycle
                auto e1 = shared_edges(g, f, tris[0]);
                auto e2 = shared_edges(g, f, tris[1]);
                bool ok = false;
                if (e1.size() == 1 && e2.size() == 1) {
                    auto [a1, b1] = *e1.begin();
                    auto [a2, b2] = *e2.begin();
                    int y = -1;
                    for (int v : {a1, b1})
                        if (v == a2 || v == b2) y = v;
                    if (y != -1 && g.degree(y) == 3 && g.on_outer_face(y)) {
                        // common apex
                        std::set<int> t1(g.face(tris[0]).boundary.begin(),
                                         g.face(tris[0]).boundary.end());
                        std::set<int> t2(g.face(tris[1]).boundary.begin(),
                                         g.face(tris[1]).boundary.end());
                        std::set<int> fb(g.face(f).boundary.begin(),
                                         g.face(f).boundary.end());
                        int u1 = -1, u2 = -1;
                        for (int v : t1)
                            if (!fb.count(v)) u1 = v;
                        for (int v : t2)
                            if (!fb.count(v)) u2 = v;
                        ok = (u1 != -1 && u1 == u2);
                    }
                }
                if (!ok)
                    violate(it, "4-face " + std::to_string(f) +
                                    " adjacent to two 3-faces outside the allowed shape");
            }
        }
    }

    auto kind_of = [&](const Cluster& c) { return c.kind; };
    {
        auto& it = add("st-viii-c4-neighbors-6plus");
        for (const auto& c : cls) {
            if (kind_of(c) != ClusterKind::C4) continue;
            for (int h : cluster_adjacent_faces(g, c))
                if (g.face(h).degree() < 6)
                    violate(it, "face " + std::to_string(h) + " (degree " +
                                    std::to_string(g.face(h).degree()) +
                                    ") adjacent to a C4 cluster");
        }
    }
    {
        auto& it = add("st-ix-c3-neighbors");
        for (const auto& c : cls) {
            if (kind_of(c) != ClusterKind::C3) continue;
            bool touches_d = false;
            for (int h : cluster_adjacent_faces(g, c)) {
                if (h == D) { touches_d = true; continue; }
                if (g.face(h).degree() < 6)
                    violate(it, "face " + std::to_string(h) + " (degree " +
                                    std::to_string(g.face(h).degree()) +
                                    ") adjacent to a C3 cluster");
            }
            if (touches_d) {
                int u1 = c.roles[0], u2 = c.roles[1], u5 = c.roles[4];
                std::set<int> dv(g.face(D).boundary.begin(), g.face(D).boundary.end());
                bool shape = g.has_edge(u2, u5) && dv == std::set<int>{u1, u2, u5};
                if (!shape)
                    violate(it, "C3 adjacent to D without the u1u2u5 outer triangle");
            }
        }
    }
    {
        auto& it = add("st-x-c2-neighbors");
        for (const auto& c : cls) {
            if (kind_of(c) != ClusterKind::C2) continue;
            for (int h : cluster_adjacent_faces(g, c)) {
                if (h == D) continue;
                if (g.face(h).degree() < 6)
                    violate(it, "face " + std::to_string(h) + " (degree " +
                                    std::to_string(g.face(h).degree()) +
                                    ") adjacent to a C2 cluster");
            }
        }
    }
    {
        auto& it = add("st-xi-c4-rim-paths");
        for (const auto& c : cls) {
            if (kind_of(c) != ClusterKind::C4) continue;
            const auto& r = c.roles; // u1, u2..u5 rim cycle
            const std::array<std::pair<int, int>, 4> rim_pairs = {
                std::pair{r[1], r[2]}, {r[2], r[3]}, {r[3], r[4]}, {r[4], r[1]}};
            for (auto [a, b] : rim_pairs) {
                std::set<int> forb(r.begin(), r.end());
                forb.erase(a);
                forb.erase(b);
                auto lens = path_lengths(g, a, b, forb, 4);
                for (int L : {2, 3, 4})
                    if (lens.count(L))
                        violate(it, "path of length " + std::to_string(L) +
                                        " between rim vertices " + std::to_string(a) +
                                        "," + std::to_string(b));
            }
        }
    }
    {
        auto& it = add("st-xii-c4-diagonal-paths");
        for (const auto& c : cls) {
            if (kind_of(c) != ClusterKind::C4) continue;
            const auto& r = c.roles;
            const std::array<std::pair<int, int>, 2> diag = {std::pair{r[1], r[3]},
                                                             {r[2], r[4]}};
            for (auto [a, b] : diag) {
                std::set<int> forb(r.begin(), r.end());
                forb.erase(a);
                forb.erase(b);
                auto lens = path_lengths(g, a, b, forb, 3);
                for (int L : {1, 2, 3})
                    if (lens.count(L))
                        violate(it, "path of length " + std::to_string(L) +
                                        " between opposite rim vertices " +
                                        std::to_string(a) + "," + std::to_string(b));
            }
        }
    }
    {
        auto& it = add("st-xiii-c4c3-shared-5vertex");
        for (const auto& c4 : cls) {
            if (kind_of(c4) != ClusterKind::C4) continue;
            for (const auto& c3 : cls) {
                if (kind_of(c3) != ClusterKind::C3) continue;
                std::set<int> a(c4.vertices().begin(), c4.vertices().end());
                std::set<int> b(c3.vertices().begin(), c3.vertices().end());
                std::set<int> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::inserter(common, common.begin()));
                bool has5 = std::any_of(common.begin(), common.end(),
                                        [&](int v) { return g.degree(v) == 5; });
                if (!has5) continue;
                bool ok = common.size() == 1;
                if (ok) {
                    int v = *common.begin();
                    bool on_rim = std::find(c4.roles.begin() + 1, c4.roles.end(), v) !=
                                  c4.roles.end();
                    bool is_end = (v == c3.roles[1] || v == c3.roles[4]);
                    ok = on_rim && is_end && g.degree(v) == 5;
                }
                if (!ok)
                    violate(it, "C4 and C3 share a 5-vertex outside the allowed shape");
            }
        }
    }
    {
        auto& it = add("st-xiv-c4-two-c3");
        for (const auto& c4 : cls) {
            if (kind_of(c4) != ClusterKind::C4) continue;
            // C3 clusters attached at rim 5-vertices
            std::vector<std::pair<int, const Cluster*>> att; // (rim vertex, c3)
            for (const auto& c3 : cls) {
                if (kind_of(c3) != ClusterKind::C3) continue;
                for (int i = 1; i <= 4; ++i) {
                    int v = c4.roles[i];
                    if (g.degree(v) != 5) continue;
                    if (std::find(c3.vertices().begin(), c3.vertices().end(), v) !=
                        c3.vertices().end())
                        att.push_back({i, &c3});
                }
            }
            for (std::size_t i = 0; i < att.size(); ++i)
                for (std::size_t j = i + 1; j < att.size(); ++j) {
                    if (att[i].second == att[j].second) continue;
                    int pi = att[i].first, pj = att[j].first;
                    bool adjacent_rim = (std::abs(pi - pj) == 1) ||
                                        (std::abs(pi - pj) == 3);
                    if (!adjacent_rim) continue;
                    const auto& va = att[i].second->vertices();
                    const auto& vb = att[j].second->vertices();
                    std::set<int> sa(va.begin(), va.end());
                    for (int v : vb)
                        if (sa.count(v))
                            violate(it,
                                    "two C3 clusters at adjacent rim 5-vertices share "
                                    "vertex " + std::to_string(v));
                }
        }
    }
    {
        auto& it = add("no-internal-4regular-diamond");
        for (const auto& m : find_pattern(g, "diamond4"))
            violate(it, "internal 4-regular diamond on " +
                            vstr({m.vertex_map[0], m.vertex_map[1], m.vertex_map[2],
                                  m.vertex_map[3]}));
    }

    return rep;
}

} // namespace dpd
