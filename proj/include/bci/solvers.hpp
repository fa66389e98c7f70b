#pragma once

#include <cstdint>
#include <vector>

#include "bci/broadcast.hpp"
#include "bci/graph.hpp"

namespace bci {

struct SolverOptions {
    // Wall-clock budget per solve; results that hit it are flagged, never
    // silently approximate.
    std::int64_t budget_ms = 60000;
    // Hard vertex cap for alpha_b_bruteforce.
    int bruteforce_cap = 10;
};

// Result of an exact set solver (independence or packing number).
// When budget_hit is set, optimum is the best-known lower bound and the
// witness is the best set found.
struct SetSolveResult {
    int optimum = 0;
    std::vector<int> witness;  // ascending; lexicographically smallest optimal set
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    double wall_ms = 0.0;
};

// Result of an exact broadcast solver; witness is the lexicographically
// smallest optimal assignment vector.
struct BroadcastSolveResult {
    int optimum = 0;
    Broadcast witness;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    double wall_ms = 0.0;
};

// alpha(G): branch and bound on bitsets with a greedy clique-cover upper
// bound and degree-<=1 reductions.
SetSolveResult max_independent_set(const Graph& g, const SolverOptions& opts = {});

// rho(G) = alpha of the square graph; the witness is re-checked to be
// pairwise at distance >= 3 in g itself.
SetSolveResult max_packing(const Graph& g, const SolverOptions& opts = {});

// alpha_b(G) by exhaustive enumeration of all f with 0 <= f(x) <= ecc(x);
// prefixes violating (B2) are cut, which discards no valid broadcast.
// The reference oracle. Requires g connected and g.n <= opts.bruteforce_cap.
BroadcastSolveResult alpha_b_bruteforce(const Graph& g, const SolverOptions& opts = {});

// alpha_b(G) by branch and bound: vertices in descending-eccentricity order,
// (B2) constraint propagation shrinking per-vertex value caps, and the
// pruning bound  current weight + sum of surviving caps.
BroadcastSolveResult alpha_b_exact(const Graph& g, const SolverOptions& opts = {});

// The better of (a) f=1 on a maximum independent set and (b) f(x)=ecc(x) on
// one peripheral vertex. Weight >= max(alpha, diam) whenever n >= 2.
Broadcast diametral_broadcast(const Graph& g, const SolverOptions& opts = {});

// Size of a greedy clique cover of the whole graph; a sound upper bound on
// alpha(G), always computable.
int greedy_clique_cover_bound(const Graph& g);

}  // namespace bci
