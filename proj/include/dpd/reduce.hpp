#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpd/cover.hpp"
#include "dpd/patterns.hpp"

namespace dpd {

// An elimination order over a configuration K together with its save pairs.
// Pairs are nested (LIFO) with the outermost pair spanning the whole order;
// k is the capacity threshold (4 throughout).
struct ReductionOrder {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> pairs;
    int k = 4;
};

struct WwCheck {
    bool pass = false;
    std::string violated; // "i", "ii", "iii", or a structural code
    std::string detail;
    ReductionOrder order;
    std::vector<int> kset;
};

// Literal evaluation of the three ordering conditions.  With a single pair
// (v1, vm) this is exactly the theorem's statement; with nested pairs the
// checks are: (i) literally on the outermost pair, (ii) on every pair, (iii)
// on every middle vertex that is not a pair's last, and every inner pair's
// first vertex keeps at least two spare colors (blockers <= k-2) so a save
// remains possible.  k_edges, when given, must be exactly the edges induced
// by kset in g.
WwCheck check_ww_conditions(const BaseGraph& g, const std::vector<int>& kset,
                            const ReductionOrder& order);
WwCheck check_ww_conditions(const BaseGraph& g, const std::vector<int>& kset,
                            const std::vector<std::pair<int, int>>& k_edges,
                            const ReductionOrder& order);

// Exhaustive search for a passing order with at most max_pairs nested pairs.
std::optional<ReductionOrder> find_reduction_order(const BaseGraph& g,
                                                   const std::vector<int>& kset,
                                                   int max_pairs = 3);

// ---- Reducibility oracle ---------------------------------------------------

// External neighbors are abstracted by stubs: each stub may decrement one
// cover vertex's capacity by one (a matched external pick blocks at most one
// cover vertex per incident edge, by the matching property).
struct StubModel {
    std::vector<int> stub_count; // per K vertex
};

enum class Verdict { Reducible, Counterexample, Exhausted };

struct OracleWitness {
    std::vector<std::vector<std::pair<int, int>>> matching_pairs; // per K edge
    std::vector<std::vector<int>> stub_dec;                       // [v][i-1] decrements
    std::vector<std::vector<int>> f;                              // [v][i-1]
};

struct OracleResult {
    Verdict verdict = Verdict::Reducible;
    long long instances_checked = 0;
    long long instances_planned = 0;
    bool exhaustive = false;
    std::optional<OracleWitness> witness;
};

enum class OracleMode { Auto, Exhaustive, Sampled };

struct OracleOptions {
    int s = 4;
    std::string f_family = "ones"; // "ones" | "boundary"
    long long budget = 20'000'000;
    std::uint64_t seed = 1;
    int jobs = 1;
    // Auto: exhaustive for "ones" when the plan fits the budget, else sampled.
    // Exhaustive reports Exhausted when the budget runs out mid-sweep.
    OracleMode mode = OracleMode::Auto;
};

// K = the pattern's in_k vertices; covers are gauge-fixed (identity matchings
// on a spanning tree of K), full permutations on the remaining edges, and the
// stub adversary ranges over all capacity-decrement patterns.  The "ones"
// family is swept exhaustively (dominance: every partial matching is refined
// by a permutation, every stub miss by a hit); "boundary" samples seeded
// instances from the sum-4 compositions with parts <= 2.
OracleResult reducible_oracle(const std::string& pattern_id, const OracleOptions& opt);
OracleResult reducible_oracle(const Pattern& p, const OracleOptions& opt);

// Re-verify one concrete witness instance via the solver; true = extension
// exists (witness refuted), false = genuine counterexample instance.
bool replay_witness(const std::string& pattern_id, int s, const OracleWitness& w);
bool replay_witness(const Pattern& p, int s, const OracleWitness& w);

// K as an abstract graph plus its stub model, in pattern vertex order.
std::pair<BaseGraph, StubModel> pattern_k_graph(const Pattern& p);

// ---- Paired extension ------------------------------------------------------

struct PairedExtension {
    std::optional<Transversal> result;
    bool greedy_succeeded = false;
    int stalled_at = -1; // order position where the greedy ran dry, or -1
};

// Constructive coloring along a checked order: each pair's first vertex picks
// the color that best preserves capacity at its partner (unmatched preferred),
// middles take any surviving color, and a stall falls back to exhaustive
// backtracking.  Requires the WwCheck token of a passed check.
PairedExtension paired_extension(const Cover& cover_of_k, const WeightFn& f,
                                 const WwCheck& checked);

} // namespace dpd
