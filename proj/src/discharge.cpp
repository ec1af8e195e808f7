#include "dpd/discharge.hpp"

#include <algorithm>
#include <set>

namespace dpd {

std::string Entity::str() const {
    switch (kind) {
        case Vertex: return "v" + std::to_string(a);
        case Face: return "f" + std::to_string(a);
        default:
            return "e" + std::to_string(a) + "-" + std::to_string(b);
    }
}

std::map<Entity, Rat> ChargeLedger::balances(const PlaneGraph& g, int upto) const {
    std::map<Entity, Rat> bal;
    for (int v = 0; v < g.n(); ++v) bal[Entity::vertex(v)] = init_vertex[v];
    for (int f = 0; f < g.face_count(); ++f) bal[Entity::face(f)] = init_face[f];
    for (int i = 0; i < upto && i < static_cast<int>(transfers.size()); ++i) {
        const auto& t = transfers[i];
        bal[t.from] -= t.amount;
        bal[t.to] += t.amount;
    }
    return bal;
}

Rat ChargeLedger::total(const PlaneGraph& g, int upto) const {
    Rat sum(0);
    for (const auto& [e, r] : balances(g, upto)) sum += r;
    return sum;
}

ChargeLedger initial_charges(const PlaneGraph& g, bool enforce_lints) {
    if (enforce_lints) {
        auto rep = lint_hypotheses(g);
        if (!rep.all_pass()) {
            std::string what = "lint failures:";
            for (const auto& it : rep.items)
                if (!it.pass) what += " " + it.id;
            fail("HypothesisViolation", what);
        }
    }
    ChargeLedger led;
    led.init_vertex.resize(g.n());
    led.init_face.resize(g.face_count());
    for (int v = 0; v < g.n(); ++v) led.init_vertex[v] = Rat(g.degree(v) - 4);
    for (int f = 0; f < g.face_count(); ++f)
        led.init_face[f] = f == g.outer_face() ? Rat(g.face(f).degree() + 4)
                                               : Rat(g.face(f).degree() - 4);
    if (led.total(g, 0) != Rat(0))
        fail("ChargeInternal", "initial charges do not sum to zero");
    return led;
}

namespace {

// Incident face slots of v in rotation order (with multiplicity).
std::vector<int> face_slots(const PlaneGraph& g, int v) {
    std::vector<int> out;
    for (int u : g.rotation(v)) out.push_back(g.face_of_dart(v, u));
    return out;
}

struct RuleEngine {
    const PlaneGraph& g;
    ChargeLedger& led;
    const int D;
    std::vector<int> cluster_of_face; // face -> cluster index or -1
    std::vector<char> in_internal_c4; // per vertex

    RuleEngine(const PlaneGraph& g_, ChargeLedger& led_)
        : g(g_), led(led_), D(g_.outer_face()) {
        led.clusters = clusters(g);
        cluster_of_face.assign(g.face_count(), -1);
        in_internal_c4.assign(g.n(), 0);
        for (std::size_t i = 0; i < led.clusters.size(); ++i) {
            for (int f : led.clusters[i].faces)
                cluster_of_face[f] = static_cast<int>(i);
            const auto& c = led.clusters[i];
            if (c.kind == ClusterKind::C4 && c.is_internal)
                for (int v : c.vertices()) in_internal_c4[v] = 1;
        }
    }

    void send(const std::string& rule, Entity from, Entity to, Rat amount,
              const std::string& note) {
        led.transfers.push_back({rule, from, to, amount, note});
    }

    bool face_in_internal_c4(int f) const {
        int c = cluster_of_face[f];
        return c >= 0 && led.clusters[c].kind == ClusterKind::C4 &&
               led.clusters[c].is_internal;
    }

    void r1() {
        for (int v = 0; v < g.n(); ++v) {
            if (!g.is_internal_vertex(v) || g.degree(v) != 4) continue;
            auto slots = face_slots(g, v);
            for (int i = 0; i < 4; ++i) {
                int fa = slots[i], f2 = slots[(i + 1) % 4], f3 = slots[(i + 2) % 4],
                    fb = slots[(i + 3) % 4];
                if (g.face(fa).degree() != 3 && g.face(f2).degree() == 3 &&
                    g.face(f3).degree() == 3 && g.face(fb).degree() != 3) {
                    std::string note = "4-vertex " + std::to_string(v) +
                                       " between non-triangles f" + std::to_string(fa) +
                                       ",f" + std::to_string(fb);
                    send("R1", Entity::vertex(v), Entity::face(f2), Rat(1, 6), note);
                    send("R1", Entity::vertex(v), Entity::face(f3), Rat(1, 6), note);
                    break;
                }
            }
        }
    }

    void r2() {
        for (int v = 0; v < g.n(); ++v) {
            if (!g.is_internal_vertex(v) || g.degree(v) != 5) continue;
            for (int f : g.faces_incident(v)) {
                if (g.face(f).degree() != 3 || f == D) continue;
                if (face_in_internal_c4(f)) {
                    // exclusivity: v cannot sit on a different internal C4
                    if (in_internal_c4[v]) {
                        int c = cluster_of_face[f];
                        const auto& vs = led.clusters[c].vertices();
                        if (std::find(vs.begin(), vs.end(), v) == vs.end())
                            fail("ChargeInternal",
                                 "R2 cases 1 and 2 both fire at vertex " +
                                     std::to_string(v));
                    }
                    send("R2", Entity::vertex(v), Entity::face(f), Rat(1, 2),
                         "3-face in an internal C4");
                } else if (in_internal_c4[v]) {
                    // tau(v -> f) = 0; recorded implicitly (no transfer)
                } else {
                    send("R2", Entity::vertex(v), Entity::face(f), Rat(1, 3),
                         "5-vertex outside internal C4");
                }
            }
        }
    }

    void r3() {
        for (int v = 0; v < g.n(); ++v) {
            if (!g.is_internal_vertex(v) || g.degree(v) < 6) continue;
            for (int f : g.faces_incident(v))
                if (g.face(f).degree() == 3 && g.is_internal_face(f))
                    send("R3", Entity::vertex(v), Entity::face(f), Rat(1, 2),
                         "6+-vertex to internal 3-face");
        }
    }

    void r4() {
        for (int f = 0; f < g.face_count(); ++f) {
            if (g.face(f).degree() != 3 || !g.is_internal_face(f)) continue;
            for (int h : g.adjacent_faces(f))
                if (h != D && g.face(h).degree() == 4)
                    send("R4", Entity::face(h), Entity::face(f), Rat(2, 5),
                         "4-face to adjacent internal 3-face");
        }
    }

    void r5() {
        for (int f = 0; f < g.face_count(); ++f) {
            if (f == D || g.face(f).degree() != 3) continue;
            for (int h : g.adjacent_faces(f)) {
                int m = g.face(h).degree();
                if (h != D && m >= 6)
                    send("R5", Entity::face(h), Entity::face(f), Rat(m - 4, m),
                         "(m-4)/m from " + std::to_string(m) + "-face");
            }
        }
    }

    void r6() {
        for (int f = 0; f < g.face_count(); ++f) {
            if (f == D || g.face(f).degree() != 4) continue;
            for (int h : g.adjacent_faces(f)) {
                int m = g.face(h).degree();
                if (h != D && m >= 5)
                    send("R6", Entity::face(h), Entity::face(f), Rat(m - 4, m),
                         "(m-4)/m from " + std::to_string(m) + "-face to 4-face");
            }
        }
    }

    void r7() {
        for (int v = 0; v < g.n(); ++v) {
            if (!g.is_internal_vertex(v) || g.degree(v) != 4) continue;
            for (int u : g.neighbors(v)) {
                auto [f1, f2] = g.edge_faces(v, u);
                if (g.face(f1).degree() >= 6 && g.face(f2).degree() >= 6) {
                    for (int f : {f1, f2}) {
                        int d = g.face(f).degree();
                        send("R7", Entity::face(f), Entity::vertex(v),
                             Rat(d - 4, 2 * d),
                             "edge " + std::to_string(v) + "-" + std::to_string(u) +
                                 " between 6+-faces");
                    }
                }
            }
        }
    }

    void r8() {
        for (int v : g.face(D).boundary)
            send("R8", Entity::vertex(v), Entity::face(D),
                 led.init_vertex[v], "outer vertex sends its initial charge");
    }

    void r9() {
        std::set<std::pair<int, int>> middle;
        std::set<std::pair<int, int>> outer_edges;
        const auto& b = g.face(D).boundary;
        for (std::size_t i = 0; i < b.size(); ++i) {
            int u = b[i], v = b[(i + 1) % b.size()];
            outer_edges.insert({std::min(u, v), std::max(u, v)});
        }
        for (auto [u, v] : g.edges()) {
            if (outer_edges.count({u, v})) continue;
            if (g.on_outer_face(u) || g.on_outer_face(v)) middle.insert({u, v});
        }
        for (auto [u, v] : middle) {
            Entity agent = Entity::middle_edge(u, v);
            send("R9", Entity::face(D), agent, Rat(1), "D pays its middle edge");
            auto [f1, f2] = g.edge_faces(u, v);
            send("R9", agent, Entity::face(f1), Rat(1, 2), "middle edge to side face");
            send("R9", agent, Entity::face(f2), Rat(1, 2), "middle edge to side face");
        }
    }

    void r10() {
        // mu* snapshot
        led.r9_end = static_cast<int>(led.transfers.size());
        auto bal = led.balances(g, led.r9_end);
        auto cluster_sum = [&](const Cluster& c) {
            Rat s(0);
            for (int f : c.faces) s += bal.at(Entity::face(f));
            return s;
        };

        std::vector<int> special_c4, special_c3;
        std::vector<Rat> mu_star(led.clusters.size());
        for (std::size_t i = 0; i < led.clusters.size(); ++i) {
            const auto& c = led.clusters[i];
            mu_star[i] = cluster_sum(c);
            if (c.kind == ClusterKind::C4 && c.is_internal) {
                int big = 0;
                for (int j = 1; j <= 4; ++j)
                    if (g.degree(c.roles[j]) >= 5) ++big;
                if (big >= 3) special_c4.push_back(static_cast<int>(i));
            }
            if (c.kind == ClusterKind::C3 && c.is_internal && mu_star[i].negative())
                special_c3.push_back(static_cast<int>(i));
        }

        // special vertices: 5-vertices on one special C4 and one special C3
        std::vector<Rat> running(mu_star); // C3 totals updated as R10 pays
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 5) continue;
            int c4 = -1, c3 = -1;
            for (int i : special_c4) {
                const auto& vs = led.clusters[i].vertices();
                if (std::find(vs.begin(), vs.end(), v) != vs.end()) c4 = i;
            }
            for (int i : special_c3) {
                const auto& vs = led.clusters[i].vertices();
                if (std::find(vs.begin(), vs.end(), v) != vs.end()) c3 = i;
            }
            if (c4 < 0 || c3 < 0) continue;
            if (!running[c3].negative()) {
                led.notes.push_back(
                    "AmbiguousRule: special vertex " + std::to_string(v) +
                    " skipped, its C3 is already satisfied");
                continue;
            }
            Rat amount = (mu_star[c3] < Rat(-1, 3)) ? Rat(1, 3) : -mu_star[c3];
            // route between the member faces at v, deterministically
            auto member_at = [&](int ci) {
                int best = -1;
                for (int f : led.clusters[ci].faces) {
                    const auto& fb = g.face(f).boundary;
                    if (std::find(fb.begin(), fb.end(), v) != fb.end() &&
                        (best == -1 || f < best))
                        best = f;
                }
                return best;
            };
            int from = member_at(c4), to = member_at(c3);
            send("R10", Entity::face(from), Entity::face(to), amount,
                 "special C4 pays the special C3 through 5-vertex " +
                     std::to_string(v));
            running[c3] += amount;
        }
    }
};

} // namespace

void apply_rules(const PlaneGraph& g, ChargeLedger& led) {
    RuleEngine eng(g, led);
    eng.r1();
    eng.r2();
    eng.r3();
    eng.r4();
    eng.r5();
    eng.r6();
    eng.r7();
    eng.r8();
    eng.r9();
    eng.r10(); // snapshots mu* first
}

DischargeReport verify(const PlaneGraph& g, const ChargeLedger& led) {
    DischargeReport rep;
    const int D = g.outer_face();

    // conservation after every transfer prefix
    rep.conserved = true;
    {
        Rat running(0);
        for (int v = 0; v < g.n(); ++v) running += led.init_vertex[v];
        for (int f = 0; f < g.face_count(); ++f) running += led.init_face[f];
        if (running != Rat(0)) rep.conserved = false;
        // transfers are two-sided by construction, so prefix sums stay equal;
        // recompute the final total exactly anyway
        if (led.total(g, static_cast<int>(led.transfers.size())) != Rat(0))
            rep.conserved = false;
    }

    rep.phase_pure = true;
    for (int i = 0; i < static_cast<int>(led.transfers.size()); ++i) {
        bool is_r10 = led.transfers[i].rule == "R10";
        if (is_r10 != (i >= led.r9_end)) rep.phase_pure = false;
    }

    auto bal = led.balances(g, static_cast<int>(led.transfers.size()));
    auto star = led.balances(g, led.r9_end);

    rep.vertex_final.resize(g.n());
    rep.face_final.resize(g.face_count());
    rep.face_mu_star.resize(g.face_count());
    for (int v = 0; v < g.n(); ++v) rep.vertex_final[v] = bal.at(Entity::vertex(v));
    for (int f = 0; f < g.face_count(); ++f) {
        rep.face_final[f] = bal.at(Entity::face(f));
        rep.face_mu_star[f] = star.at(Entity::face(f));
    }
    rep.outer_final = rep.face_final[D];

    // middle-edge agents must end at zero
    for (const auto& [e, r] : bal)
        if (e.kind == Entity::MiddleEdge && r != Rat(0))
            rep.violations.push_back("agent " + e.str() + " retains " + r.str());

    // per-face income from middle edges (the Remark's accounting)
    for (const auto& t : led.transfers)
        if (t.rule == "R9" && t.from.kind == Entity::MiddleEdge)
            rep.from_outer_agents[t.to.a] += t.amount;

    auto trace_for = [&](Entity e) {
        std::string out;
        for (const auto& t : led.transfers)
            if (t.from == e || t.to == e)
                out += "\n    " + t.rule + " " + t.from.str() + " -> " + t.to.str() +
                       " " + t.amount.str() + " (" + t.note + ")";
        return out;
    };

    for (int v = 0; v < g.n(); ++v)
        if (rep.vertex_final[v].negative())
            rep.violations.push_back("vertex " + std::to_string(v) +
                                     " has final charge " + rep.vertex_final[v].str() +
                                     trace_for(Entity::vertex(v)));
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == D || g.face(f).degree() < 4) continue;
        if (rep.face_final[f].negative())
            rep.violations.push_back("face " + std::to_string(f) + " has final charge " +
                                     rep.face_final[f].str() +
                                     trace_for(Entity::face(f)));
    }
    for (std::size_t i = 0; i < led.clusters.size(); ++i) {
        const auto& c = led.clusters[i];
        ClusterCharge cc;
        cc.index = static_cast<int>(i);
        cc.kind = c.kind;
        cc.initial = Rat(0);
        cc.sigma = Rat(0);
        cc.final_charge = Rat(0);
        cc.mu_star = Rat(0);
        for (int f : c.faces) {
            cc.initial += led.init_face[f];
            cc.final_charge += rep.face_final[f];
            cc.mu_star += rep.face_mu_star[f];
        }
        cc.sigma = cc.final_charge - cc.initial;
        if (c.kind == ClusterKind::C4 && c.is_internal) {
            int big = 0;
            for (int j = 1; j <= 4; ++j)
                if (g.degree(c.roles[j]) >= 5) ++big;
            cc.special = big >= 3;
        }
        if (c.kind == ClusterKind::C3 && c.is_internal)
            cc.special = cc.mu_star.negative();
        rep.cluster_charges.push_back(cc);
        if (cc.final_charge.negative()) {
            std::string w = "cluster " + std::to_string(i) + " (" + to_string(c.kind) +
                            ") has final charge " + cc.final_charge.str();
            for (int f : c.faces) w += trace_for(Entity::face(f));
            rep.violations.push_back(w);
        }
    }
    if (rep.outer_final != Rat(1))
        rep.violations.push_back("outer face final charge is " +
                                 rep.outer_final.str() + ", expected 1" +
                                 trace_for(Entity::face(D)));
    return rep;
}

} // namespace dpd
