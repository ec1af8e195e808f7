#include "dpd/json_io.hpp"

#include <fstream>

namespace dpd {

PlaneGraph graph_from_json(const json& j, std::vector<std::string>* warnings) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "n" && it.key() != "rotations" && it.key() != "outer_face") {
            if (warnings)
                warnings->push_back("ignoring unknown key '" + it.key() + "'");
        }
    }
    if (!j.contains("n") || !j.contains("rotations") || !j.contains("outer_face"))
        fail("BadInput", "graph json needs n, rotations, outer_face");
    int n = j.at("n").get<int>();
    auto rotations = j.at("rotations").get<std::vector<std::vector<int>>>();
    auto outer = j.at("outer_face").get<std::vector<int>>();
    return PlaneGraph::build(n, std::move(rotations), outer);
}

json graph_to_json(const PlaneGraph& g) {
    json j;
    j["n"] = g.n();
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < g.n(); ++v) rot.push_back(g.rotation(v));
    j["rotations"] = rot;
    j["outer_face"] = g.face(g.outer_face()).boundary;
    return j;
}

std::pair<Cover, WeightFn> cover_from_json(const BaseGraph& g, const json& j) {
    int s = j.at("s").get<int>();
    std::vector<std::vector<std::pair<int, int>>> pairs(g.edges.size());
    std::map<std::pair<int, int>, int> eidx;
    for (std::size_t e = 0; e < g.edges.size(); ++e) eidx[g.edges[e]] = static_cast<int>(e);
    for (const auto& m : j.at("matchings")) {
        int u = m.at("u").get<int>(), v = m.at("v").get<int>();
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (!eidx.count(key))
            fail("BadInput", "matching on non-edge " + std::to_string(u) + "-" +
                                 std::to_string(v));
        for (const auto& pr : m.at("pairs")) {
            int i = pr.at(0).get<int>(), jj = pr.at(1).get<int>();
            if (u <= v) pairs[eidx[key]].push_back({i, jj});
            else pairs[eidx[key]].push_back({jj, i});
        }
    }
    Cover c = Cover::from_pairs(g, s, pairs);
    WeightFn f = WeightFn::uniform(g.n, s, 1);
    if (j.contains("f")) {
        auto fv = j.at("f").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(fv.size()) != g.n)
            fail("BadInput", "f must list one row per vertex");
        for (auto& row : fv)
            if (static_cast<int>(row.size()) != s)
                fail("BadInput", "each f row must have s entries");
        f.f = fv;
    }
    return {c, f};
}

json lint_report_to_json(const LintReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items) {
        items.push_back({{"id", it.id}, {"pass", it.pass}, {"witnesses", it.witnesses}});
    }
    return {{"items", items}, {"all_pass", rep.all_pass()}};
}

json matches_to_json(const std::vector<PatternMatch>& ms, const Pattern& p) {
    json arr = json::array();
    for (const auto& m : ms) {
        json conds = json::array();
        for (const auto& [cond, ok] : m.side_conditions_checked)
            conds.push_back({{"condition", cond}, {"holds", ok}});
        json vm = json::object();
        for (int i = 0; i < p.k; ++i) vm[p.labels[i]] = m.vertex_map[i];
        arr.push_back({{"pattern_id", m.pattern_id},
                       {"vertex_map", vm},
                       {"side_conditions_checked", conds}});
    }
    return arr;
}

json clusters_to_json(const PlaneGraph& g, const std::vector<Cluster>& cs) {
    json arr = json::array();
    for (const auto& c : cs) {
        json roles = json::object();
        for (std::size_t i = 0; i < c.roles.size(); ++i)
            roles["u" + std::to_string(i + 1)] = c.roles[i];
        json faces = json::array();
        for (int f : c.faces) {
            faces.push_back({{"id", f}, {"boundary", g.face(f).boundary}});
        }
        arr.push_back({{"kind", to_string(c.kind)},
                       {"faces", faces},
                       {"labeled_vertices", roles},
                       {"is_internal", c.is_internal}});
    }
    return arr;
}

namespace {

json entity_to_json(const Entity& e) {
    switch (e.kind) {
        case Entity::Vertex: return {{"vertex", e.a}};
        case Entity::Face: return {{"face", e.a}};
        default: return {{"edge", {e.a, e.b}}};
    }
}

} // namespace

json ledger_to_json(const ChargeLedger& led, const PlaneGraph& g) {
    json init_v = json::array(), init_f = json::array();
    for (const auto& r : led.init_vertex) init_v.push_back(r.str());
    for (const auto& r : led.init_face) init_f.push_back(r.str());
    json transfers = json::array();
    for (const auto& t : led.transfers) {
        transfers.push_back({{"rule", t.rule},
                             {"from", entity_to_json(t.from)},
                             {"to", entity_to_json(t.to)},
                             {"amount", t.amount.str()},
                             {"note", t.note}});
    }
    return {{"initial_vertex", init_v},
            {"initial_face", init_f},
            {"outer_face", g.outer_face()},
            {"transfers", transfers},
            {"mu_star_prefix", led.r9_end},
            {"notes", led.notes}};
}

json discharge_report_to_json(const DischargeReport& rep, const PlaneGraph& g) {
    json verts = json::array(), faces = json::array(), cls = json::array();
    for (const auto& r : rep.vertex_final) verts.push_back(r.str());
    for (const auto& r : rep.face_final) faces.push_back(r.str());
    for (const auto& c : rep.cluster_charges) {
        cls.push_back({{"index", c.index},
                       {"kind", to_string(c.kind)},
                       {"initial", c.initial.str()},
                       {"sigma", c.sigma.str()},
                       {"mu_star", c.mu_star.str()},
                       {"final", c.final_charge.str()},
                       {"special", c.special}});
    }
    return {{"vertex_final", verts},
            {"face_final", faces},
            {"clusters", cls},
            {"outer_final", rep.outer_final.str()},
            {"conserved", rep.conserved},
            {"phase_pure", rep.phase_pure},
            {"violations", rep.violations},
            {"ok", rep.ok()}};
}

json oracle_result_to_json(const OracleResult& res, const std::string& pattern_id,
                           const OracleOptions& opt) {
    json out;
    out["pattern"] = pattern_id;
    out["s"] = opt.s;
    out["f_family"] = opt.f_family;
    out["seed"] = opt.seed;
    out["budget"] = opt.budget;
    out["exhaustive"] = res.exhaustive;
    out["instances_checked"] = res.instances_checked;
    out["instances_planned"] = res.instances_planned;
    out["verdict"] = res.verdict == Verdict::Reducible       ? "REDUCIBLE"
                     : res.verdict == Verdict::Counterexample ? "COUNTEREXAMPLE"
                                                              : "EXHAUSTED";
    if (res.witness) {
        json w;
        w["matching_pairs"] = res.witness->matching_pairs;
        w["stub_dec"] = res.witness->stub_dec;
        w["f"] = res.witness->f;
        out["witness"] = w;
    }
    return out;
}

OracleWitness witness_from_json(const json& j) {
    OracleWitness w;
    w.matching_pairs =
        j.at("matching_pairs").get<std::vector<std::vector<std::pair<int, int>>>>();
    w.stub_dec = j.at("stub_dec").get<std::vector<std::vector<int>>>();
    w.f = j.at("f").get<std::vector<std::vector<int>>>();
    return w;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("BadInput", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail("BadInput", "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace dpd
