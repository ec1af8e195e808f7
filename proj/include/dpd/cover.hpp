#pragma once

#include <optional>
#include <vector>

#include "dpd/errors.hpp"

namespace dpd {

// Abstract simple graph for the cover machinery.  Covers are also built over
// configurations that are not embedded, so this is independent of PlaneGraph.
struct BaseGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v

    static BaseGraph make(int n, std::vector<std::pair<int, int>> edges);
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

private:
    std::vector<std::vector<int>> adj_;
};

// Cover of a base graph: lists L_v = {v} x [s] and one partial matching per
// edge.  Color indices are 1-based, matching the paper's [s]; fwd/bwd hold 0
// for "unmatched".
struct Cover {
    BaseGraph base;
    int s = 0;
    // matchings[e][i] = j  <=>  (u,i)-(v,j) is a cover edge for edge e = uv
    std::vector<std::vector<int>> fwd; // indexed 1..s, [0] unused
    std::vector<std::vector<int>> bwd;

    static Cover identity(const BaseGraph& g, int s);
    // pairs[e] lists (i, j) matches for edge e.
    static Cover from_pairs(const BaseGraph& g, int s,
                            const std::vector<std::vector<std::pair<int, int>>>& pairs);

    void set_edge_permutation(int e, const std::vector<int>& perm); // perm[i]=j, 1-based
    void clear_edge(int e);
    int match(int e, int i) const { return fwd[e][i]; }
};

// f : V(H) -> {0,1,2,...}; f[v][i-1] is the value on cover vertex (v, i).
struct WeightFn {
    std::vector<std::vector<int>> f;

    static WeightFn uniform(int n, int s, int value);
    int at(int v, int i) const { return f[v][i - 1]; } // 1-based color
    int list_sum(int v) const;
};

// Partial transversal; choice[v] in [1..s] or 0 for unset.
struct Transversal {
    std::vector<int> choice;

    static Transversal empty(int n) { return Transversal{std::vector<int>(n, 0)}; }
    bool full() const;
    int size() const;
};

// Greedy-elimination test of the paper's every-subgraph condition.  The
// condition is hereditary, and a residual graph on which elimination is stuck
// has all degrees >= f, so it is itself a witness subgraph; hence elimination
// emptying H[T] is equivalent to the literal definition.
bool is_strictly_f_degenerate(const Cover& cover, const WeightFn& f,
                              const Transversal& t);

// Exhaustive backtracking extension.  Subsets of strictly f-degenerate sets
// are strictly f-degenerate (H[T'] is a subgraph of H[T]), so pruning on the
// partial test is sound and complete.
std::optional<Transversal> extend_transversal(const Cover& cover,
                                              const WeightFn& f,
                                              const Transversal& partial);

struct DpChromaticOptions {
    int n_max_guard = 10;
};

// Brute-force DP-chromatic number: least k such that every cover at list size
// k admits a DP-coloring.  Matchings are gauge-fixed to identities on a
// spanning tree and enumerated as full permutations on the remaining edges;
// partial matchings are dominated by full ones (removing cover edges only
// helps), so this is exhaustive over the quotient.
int dp_chromatic(const BaseGraph& g, const DpChromaticOptions& opt = {});

// Canonical cover of a list assignment: (u,i)-(v,j) matched iff the i-th
// color of L(u) equals the j-th color of L(v).  Ragged lists are padded with
// f = 0 slots.
std::pair<Cover, WeightFn> list_assignment_to_cover(
    const BaseGraph& g, const std::vector<std::vector<int>>& lists);

// Spanning tree edge indices (by edge index into g.edges).
std::vector<int> spanning_tree_edges(const BaseGraph& g);

} // namespace dpd
