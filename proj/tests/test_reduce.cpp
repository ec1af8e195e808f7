#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dpd/reduce.hpp"
#include "test_util.hpp"

using namespace dpd;
using namespace testutil;

namespace {

// RC-7(b) realized as an abstract host: pattern graph (with its two hollow
// wheel-rim vertices), one of the proof's case edges, and pendant stubs
// raising every labeled vertex to its marked degree.
BaseGraph rc7b_host(bool edge_w11w9, bool extra_on_w11 = false) {
    const Pattern& p = pattern("rc7b");
    auto edges = p.edges;
    int next = p.k;
    if (edge_w11w9) edges.push_back({10, 8});
    else edges.push_back({10, 1}); // w11w2 case
    auto pad = [&](int v, int count) {
        for (int i = 0; i < count; ++i) edges.push_back({v, next++});
    };
    pad(0, 1); // w1
    if (edge_w11w9) pad(1, 1); // w2
    pad(2, 1);                 // w3
    pad(3, 2);                 // w4
    if (!edge_w11w9) pad(8, 1); // w9
    if (extra_on_w11) pad(10, 1);
    return BaseGraph::make(next, edges);
}

std::vector<int> kset11() {
    std::vector<int> out(11);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

} // namespace

TEST_CASE("rc7b ordering with w11w9: the proof's three nested pairs pass") {
    BaseGraph g = rc7b_host(true);
    // w6, w4, w5, w11, w2, w7, w8, w9, w10, w1, w3
    ReductionOrder ord;
    ord.vertices = {5, 3, 4, 10, 1, 6, 7, 8, 9, 0, 2};
    ord.pairs = {{5, 2}, {10, 0}, {1, 8}}; // (w6,w3), (w11,w1), (w2,w9)
    auto chk = check_ww_conditions(g, kset11(), ord);
    CHECK(chk.pass);
    CHECK(chk.violated.empty());
}

TEST_CASE("rc7b ordering with w11w2: the proof's single pair passes") {
    BaseGraph g = rc7b_host(false);
    // w2, w9, w8, w7, w3, w4, w6, w5, w10, w1, w11
    ReductionOrder ord;
    ord.vertices = {1, 8, 7, 6, 2, 3, 5, 4, 9, 0, 10};
    ord.pairs = {{1, 10}}; // (w2, w11)
    auto chk = check_ww_conditions(g, kset11(), ord);
    CHECK(chk.pass);
}

TEST_CASE("rc7b ordering fails when the last vertex degree is raised to 5") {
    BaseGraph g = rc7b_host(false, true);
    ReductionOrder ord;
    ord.vertices = {1, 8, 7, 6, 2, 3, 5, 4, 9, 0, 10};
    ord.pairs = {{1, 10}};
    auto chk = check_ww_conditions(g, kset11(), ord);
    CHECK(!chk.pass);
    CHECK(chk.violated == "ii");
}

TEST_CASE("any order whose last vertex has dG > 4 fails condition ii") {
    BaseGraph g = rc7b_host(true);
    ReductionOrder ord;
    // put the 5-vertex w4 (index 3) last, paired with its neighbor w3
    ord.vertices = {2, 8, 7, 6, 5, 1, 4, 9, 0, 10, 3};
    ord.pairs = {{2, 3}};
    auto chk = check_ww_conditions(g, kset11(), ord);
    CHECK(!chk.pass);
    CHECK(chk.violated == "ii");
}

TEST_CASE("structural validation: bijectivity and inducedness") {
    BaseGraph g = rc7b_host(true);
    ReductionOrder ord;
    ord.vertices = {5, 3, 4, 10, 1, 6, 7, 8, 9, 0, 0}; // repeated
    ord.pairs = {{5, 2}};
    CHECK_THROWS_WITH_AS(check_ww_conditions(g, kset11(), ord),
                         doctest::Contains("OrderNotBijective"), Error);

    ReductionOrder ok;
    ok.vertices = {5, 3, 4, 10, 1, 6, 7, 8, 9, 0, 2};
    ok.pairs = {{5, 2}, {10, 0}, {1, 8}};
    // claiming K has fewer edges than induced -> NotInduced
    const Pattern& p = pattern("rc7b");
    std::vector<std::pair<int, int>> claimed;
    for (auto [a, b] : p.edges)
        if (a < 11 && b < 11) claimed.push_back({a, b});
    // host also contains the case edge (10,8) inside K, so `claimed` is short
    CHECK_THROWS_WITH_AS(check_ww_conditions(g, kset11(), claimed, ok),
                         doctest::Contains("NotInduced"), Error);
    claimed.push_back({10, 8});
    CHECK(check_ww_conditions(g, kset11(), claimed, ok).pass);
}

TEST_CASE("rc1: an order with a single save pair exists and checks out") {
    const Pattern& p = pattern("rc1");
    auto edges = p.edges;
    int next = p.k;
    auto pad = [&](int v, int count) {
        for (int i = 0; i < count; ++i) edges.push_back({v, next++});
    };
    pad(0, 1); pad(1, 2); pad(2, 2); pad(4, 2);
    BaseGraph g = BaseGraph::make(next, edges);
    std::vector<int> kset = {0, 1, 2, 3, 4};
    auto found = find_reduction_order(g, kset, 1);
    REQUIRE(found.has_value());
    auto chk = check_ww_conditions(g, kset, *found);
    CHECK(chk.pass);
    // the searcher's result is usable by the paired extension
    auto [kg, stubs] = pattern_k_graph(p);
    Cover cov = Cover::identity(kg, 4);
    WeightFn f = WeightFn::uniform(kg.n, 4, 1);
    auto ext = paired_extension(cov, f, chk);
    REQUIRE(ext.result.has_value());
    CHECK(is_strictly_f_degenerate(cov, f, *ext.result));
}

TEST_CASE("rc2a needs nested pairs: no single-pair order exists") {
    const Pattern& p = pattern("rc2a");
    auto edges = p.edges;
    int next = p.k;
    for (int v = 0; v < p.k; ++v)
        for (int i = 0; i < p.stub_count(v); ++i) edges.push_back({v, next++});
    BaseGraph g = BaseGraph::make(next, edges);
    std::vector<int> kset = {0, 1, 2, 3, 4, 5, 6};
    CHECK(!find_reduction_order(g, kset, 1).has_value());
    auto multi = find_reduction_order(g, kset, 3);
    REQUIRE(multi.has_value());
    CHECK(check_ww_conditions(g, kset, *multi).pass);
}

TEST_CASE("degenerate configuration: one vertex, three stubs, list sum 4") {
    // three decrements cannot zero a sum-4 list
    BaseGraph kg = BaseGraph::make(1, {});
    Cover cov = Cover::identity(kg, 4);
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = b; c <= 4; ++c) {
                WeightFn f = WeightFn::uniform(1, 4, 1);
                for (int x : {a, b, c}) f.f[0][x - 1] = std::max(0, f.f[0][x - 1] - 1);
                CHECK(extend_transversal(cov, f, Transversal::empty(1)).has_value());
            }
}

TEST_CASE("reducible_oracle: rc1 exhaustive at f == 1") {
    OracleOptions opt;
    opt.budget = 50'000'000;
    auto res = reducible_oracle("rc1", opt);
    CHECK(res.verdict == Verdict::Reducible);
    CHECK(res.exhaustive);
    CHECK(res.instances_checked == res.instances_planned);
    // 24^3 matchings x C(4,1) C(4,2)^3 kill patterns
    CHECK(res.instances_planned == 13824LL * 4 * 6 * 6 * 6);
}

TEST_CASE("reducible_oracle: budget semantics") {
    OracleOptions opt;
    opt.budget = 1000; // far below the rc1 exhaustive plan -> sampled mode
    opt.seed = 7;
    auto res = reducible_oracle("rc1", opt);
    CHECK(!res.exhaustive);
    CHECK(res.verdict == Verdict::Reducible);
    CHECK(res.instances_checked == 1000);
}

TEST_CASE("reducible_oracle: rc1 boundary family, sampled") {
    OracleOptions opt;
    opt.f_family = "boundary";
    opt.budget = 20000;
    opt.seed = 42;
    auto res = reducible_oracle("rc1", opt);
    CHECK(res.verdict == Verdict::Reducible);
    CHECK(res.instances_checked == 20000);
}

TEST_CASE("monotonicity: removing a stub decrement never hurts") {
    // on rc1: random instances; if solvable with a decrement pattern, also
    // solvable with any decrement removed
    const Pattern& p = pattern("rc1");
    auto [kg, stubs] = pattern_k_graph(p);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> color(1, 4);
    for (int iter = 0; iter < 200; ++iter) {
        Cover cov = Cover::identity(kg, 4);
        std::vector<int> perm(5);
        for (std::size_t e = 0; e < kg.edges.size(); ++e) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin() + 1, perm.end(), rng);
            cov.set_edge_permutation(static_cast<int>(e), perm);
        }
        std::vector<std::vector<int>> dec(kg.n, std::vector<int>(4, 0));
        for (int v = 0; v < kg.n; ++v)
            for (int i = 0; i < stubs.stub_count[v]; ++i) ++dec[v][color(rng) - 1];
        WeightFn f = WeightFn::uniform(kg.n, 4, 1);
        for (int v = 0; v < kg.n; ++v)
            for (int i = 0; i < 4; ++i) f.f[v][i] = std::max(0, 1 - dec[v][i]);
        bool solvable = extend_transversal(cov, f, Transversal::empty(kg.n)).has_value();
        if (!solvable) continue;
        for (int v = 0; v < kg.n; ++v)
            for (int i = 0; i < 4; ++i) {
                if (dec[v][i] == 0) continue;
                WeightFn f2 = WeightFn::uniform(kg.n, 4, 1);
                auto d2 = dec;
                --d2[v][i];
                for (int w = 0; w < kg.n; ++w)
                    for (int j = 0; j < 4; ++j)
                        f2.f[w][j] = std::max(0, 1 - d2[w][j]);
                CHECK(extend_transversal(cov, f2, Transversal::empty(kg.n)).has_value());
            }
    }
}

TEST_CASE("paired extension agrees with plain backtracking on rc1 instances") {
    const Pattern& p = pattern("rc1");
    auto edges = p.edges;
    int next = p.k;
    for (int v = 0; v < p.k; ++v)
        for (int i = 0; i < p.stub_count(v); ++i) edges.push_back({v, next++});
    BaseGraph host = BaseGraph::make(next, edges);
    std::vector<int> kset = {0, 1, 2, 3, 4};
    auto ord = find_reduction_order(host, kset, 1);
    REQUIRE(ord.has_value());
    auto chk = check_ww_conditions(host, kset, *ord);
    REQUIRE(chk.pass);

    auto [kg, stubs] = pattern_k_graph(p);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> color(1, 4);
    int greedy_ok = 0;
    for (int iter = 0; iter < 500; ++iter) {
        Cover cov = Cover::identity(kg, 4);
        std::vector<int> perm(5);
        for (std::size_t e = 0; e < kg.edges.size(); ++e) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin() + 1, perm.end(), rng);
            cov.set_edge_permutation(static_cast<int>(e), perm);
        }
        WeightFn f = WeightFn::uniform(kg.n, 4, 1);
        for (int v = 0; v < kg.n; ++v)
            for (int i = 0; i < stubs.stub_count[v]; ++i) {
                int c = color(rng) - 1;
                f.f[v][c] = std::max(0, f.f[v][c] - 1);
            }
        auto ext = paired_extension(cov, f, chk);
        bool direct = extend_transversal(cov, f, Transversal::empty(kg.n)).has_value();
        CHECK(ext.result.has_value() == direct);
        CHECK(direct); // rc1 is reducible: every stubbed instance extends
        if (ext.greedy_succeeded) ++greedy_ok;
    }
    CHECK(greedy_ok > 0);
}

TEST_CASE("paired extension demands a passed check") {
    WwCheck bad;
    bad.pass = false;
    BaseGraph kg = BaseGraph::make(1, {});
    Cover cov = Cover::identity(kg, 4);
    WeightFn f = WeightFn::uniform(1, 4, 1);
    CHECK_THROWS_WITH_AS(paired_extension(cov, f, bad),
                         doctest::Contains("ConditionsNotChecked"), Error);
}
