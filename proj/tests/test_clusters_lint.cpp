#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dpd/clusters.hpp"
#include "dpd/lint.hpp"
#include "test_util.hpp"

using namespace dpd;
using namespace testutil;

TEST_CASE("single bounded 3-face is a C1 cluster") {
    PlaneGraph g = k3();
    auto cs = clusters(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ClusterKind::C1);
    CHECK(cs[0].faces.size() == 1);
    CHECK(!cs[0].is_internal);
}

TEST_CASE("wheel with outer 3-face: remaining triangles form a C3 fan") {
    PlaneGraph g = wheel5();
    auto cs = clusters(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ClusterKind::C3);
    CHECK(cs[0].roles[0] == 4); // hub
    // rim path 0-3-2-1 or 1-2-3-0; canonical direction starts at the smaller end
    CHECK(cs[0].roles[1] == 0);
    CHECK(cs[0].roles == std::vector<int>{4, 0, 3, 2, 1});
}

TEST_CASE("K4: one component of three mutually adjacent 3-faces -> unclassifiable") {
    PlaneGraph g = k4();
    CHECK_THROWS_WITH_AS(clusters(g), doctest::Contains("UnclassifiableCluster"),
                         Error);
    auto comps = cluster_components(g);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 3);
    CHECK(!classify_cluster(g, comps[0]).has_value());
}

TEST_CASE("octahedron: all bounded triangles join into one component") {
    PlaneGraph g = octahedron();
    auto comps = cluster_components(g);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 7);
    CHECK(!classify_cluster(g, comps[0]).has_value());
}

TEST_CASE("cluster partition covers every bounded 3-face exactly once") {
    for (const PlaneGraph& g : {k3(), k4(), octahedron(), wheel5()}) {
        int tri = 0;
        for (int f = 0; f < g.face_count(); ++f)
            if (f != g.outer_face() && g.face(f).degree() == 3) ++tri;
        int covered = 0;
        for (const auto& comp : cluster_components(g)) covered += comp.size();
        CHECK(covered == tri);
    }
}

TEST_CASE("lint: K4 fails ST(iii) and never throws") {
    PlaneGraph g = k4();
    auto rep = lint_hypotheses(g);
    CHECK(!rep.passes("st-iii-no-k4"));
    CHECK(!rep.item("st-iii-no-k4").witnesses.empty());
    CHECK(rep.passes("no-chorded-6-cycles"));
    CHECK(rep.passes("outer-3-cycle"));
    // K4's three bounded triangles form an unclassifiable component
    CHECK(!rep.passes("clusters-classifiable"));
    CHECK(!rep.all_pass());
}

TEST_CASE("lint: K3 fails only normal adjacency") {
    // K3's bounded 3-face and its outer face share all three edges, which is
    // adjacency without normal adjacency; every other predicate passes.
    auto rep = lint_hypotheses(k3());
    CHECK(!rep.passes("st-ii-normal-adjacency"));
    for (const auto& it : rep.items)
        if (it.id != "st-ii-normal-adjacency") CHECK(it.pass);
    CHECK(rep.theorem_hypotheses_pass());
}

TEST_CASE("lint: octahedron fails the chorded 6-cycle hypothesis") {
    auto rep = lint_hypotheses(octahedron());
    CHECK(!rep.passes("no-chorded-6-cycles"));
    CHECK(!rep.theorem_hypotheses_pass());
}

TEST_CASE("lint: wheel5 fails MINDEG (internal 2..3-vertices) but not NS") {
    auto rep = lint_hypotheses(wheel5());
    CHECK(!rep.passes("internal-min-degree-4"));
    CHECK(rep.passes("no-separating-3-cycles"));
}

TEST_CASE("lint id list matches the report") {
    auto rep = lint_hypotheses(k3());
    auto ids = lint_ids();
    REQUIRE(rep.items.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(rep.items[i].id == ids[i]);
}
