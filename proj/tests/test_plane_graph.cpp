#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "dpd/plane_graph.hpp"
#include "test_util.hpp"

using namespace dpd;
using namespace testutil;

TEST_CASE("triangle K3 traces two 3-faces") {
    PlaneGraph g = k3();
    CHECK(g.face_count() == 2);
    CHECK(g.face(0).degree() == 3);
    CHECK(g.face(1).degree() == 3);
    CHECK(g.n() - g.edge_count() + g.face_count() == 2);
}

TEST_CASE("K4 embedding has four 3-faces") {
    PlaneGraph g = k4();
    CHECK(g.face_count() == 4);
    for (int f = 0; f < 4; ++f) CHECK(g.face(f).degree() == 3);
    CHECK(g.is_internal_vertex(3));
    CHECK(!g.is_internal_vertex(0));
}

TEST_CASE("one-sided adjacency is rejected") {
    CHECK_THROWS_WITH_AS(PlaneGraph::build(3, {{1, 2}, {0, 2}, {0}}, {0, 1, 2}),
                         doctest::Contains("NonSimple"), Error);
}

TEST_CASE("loops, duplicates, disconnection, bad outer walk") {
    CHECK_THROWS_AS(PlaneGraph::build(2, {{0, 1}, {0}}, {0, 1}), Error);
    CHECK_THROWS_AS(PlaneGraph::build(3, {{1, 1}, {0, 0}, {}}, {0, 1}), Error);
    CHECK_THROWS_AS(PlaneGraph::build(4, {{1}, {0}, {3}, {2}}, {0, 1}), Error);
    CHECK_THROWS_AS(PlaneGraph::build(3, {{1, 2}, {0, 2}, {0, 1}}, {0, 1}), Error);
}

TEST_CASE("nonplanar rotation systems fail the Euler check") {
    // K5 with arbitrary rotations cannot satisfy V - E + F = 2.
    std::vector<std::vector<int>> rot(5);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            if (u != v) rot[v].push_back(u);
    CHECK_THROWS_WITH_AS(PlaneGraph::build(5, rot, {0, 1, 2}),
                         doctest::Contains("EulerViolation"), Error);
}

TEST_CASE("dart partition and degree sums") {
    for (const PlaneGraph& g : {k3(), k4(), octahedron(), wheel5()}) {
        int dart_total = 0;
        for (int f = 0; f < g.face_count(); ++f) dart_total += g.face(f).degree();
        CHECK(dart_total == 2 * g.edge_count());
        int deg_total = 0;
        for (int v = 0; v < g.n(); ++v) deg_total += g.degree(v);
        CHECK(deg_total == 2 * g.edge_count());
        CHECK(g.n() - g.edge_count() + g.face_count() == 2);
    }
}

TEST_CASE("internal faces share no vertex with the outer face") {
    PlaneGraph g = k4();
    for (int f = 0; f < g.face_count(); ++f) CHECK(!g.is_internal_face(f));

    PlaneGraph o = octahedron();
    int internal = 0;
    for (int f = 0; f < o.face_count(); ++f)
        if (o.is_internal_face(f)) ++internal;
    CHECK(internal == 1); // the face on the inner triangle 3,4,5
}

TEST_CASE("face adjacency means a shared edge") {
    PlaneGraph g = wheel5();
    // Each bounded triangle at the hub shares an edge with two other
    // hub triangles; no face is adjacent to itself.
    for (int f = 0; f < g.face_count(); ++f) {
        auto adj = g.adjacent_faces(f);
        for (int h : adj) CHECK(h != f);
    }
}

TEST_CASE("separating 3-cycles: facial triangles never separate") {
    CHECK(k3().separating_3_cycles().empty());
    CHECK(k4().separating_3_cycles().empty());
    CHECK(wheel5().separating_3_cycles().empty());
}

TEST_CASE("separating 3-cycles agree with the flood-fill oracle") {
    for (const PlaneGraph& g : {k3(), k4(), octahedron(), wheel5()}) {
        CHECK(g.separating_3_cycles() == oracle_separating_3_cycles(g));
    }
}

TEST_CASE("octahedron: every triangle is facial (oracle-derived)") {
    // All eight 3-cycles of the octahedron bound faces in its embedding, so
    // none separates; frozen from the flood-fill oracle output.
    PlaneGraph g = octahedron();
    CHECK(g.triangles().size() == 8);
    CHECK(oracle_separating_3_cycles(g).empty());
    CHECK(g.separating_3_cycles().empty());
}

TEST_CASE("K4 plus a vertex inside a face has a separating triangle") {
    // 0,1,2 outer; 3 center; 4 inside face [0,1,3].
    PlaneGraph g = PlaneGraph::build_from_coordinates(
        {{0, 2}, {2, -1}, {-2, -1}, {0, 0}, {0.7, 0.35}},
        {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {3, 4}},
        {0, 1, 2});
    auto sep = g.separating_3_cycles();
    REQUIRE(sep.size() == 1);
    CHECK(sep[0] == std::array<int, 3>{0, 1, 3});
    CHECK(sep == oracle_separating_3_cycles(g));
}

TEST_CASE("vertex stats count incident 3-faces") {
    PlaneGraph g = wheel5();
    auto hub = g.vertex_stats(4);
    CHECK(hub.degree == 4);
    CHECK(hub.t == 4);
    CHECK(!hub.is_internal); // hub is on the outer triangle [0,1,4]
    auto v2 = g.vertex_stats(2);
    CHECK(v2.degree == 3);
    CHECK(v2.is_internal);
}

TEST_CASE("faces_incident is consistent with rotations") {
    PlaneGraph g = octahedron();
    for (int v = 0; v < g.n(); ++v) {
        auto fs = g.faces_incident(v);
        CHECK(static_cast<int>(fs.size()) == g.degree(v));
    }
}
