#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bci/broadcast.hpp"
#include "bci/graph.hpp"
#include "bci/solvers.hpp"

namespace bci {

// Seedable portable generator. mt19937_64 output is pinned by the standard;
// the two derived draws below avoid the implementation-defined standard
// distributions so identical seeds reproduce identical graphs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // 53-bit uniform double in [0,1).
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Unbiased uniform draw from {0, ..., bound-1} by rejection.
    std::uint32_t next_below(std::uint32_t bound);

private:
    std::mt19937_64 eng_;
};

// G(n, p) with p = n^(epsilon-1); one next_unit() per pair (i, j), i < j,
// in lexicographic order.
Graph sample_host(int n, double epsilon, Rng& rng);
Graph sample_host(int n, double epsilon, std::uint64_t seed);

struct Star {
    int center = 0;
    std::vector<int> leaves;  // k consecutive vertices after the center
};

struct GluePort {
    int host_u = 0, host_v = 0;  // host edge, u < v
    int leaf_u = 0, leaf_v = 0;  // glued leaf vertices in G
};

// Bookkeeping for the star construction: host H, the glued graph G on
// n*(k+1) vertices (star i occupies block [i*(k+1), (i+1)*(k+1)), center
// first), one glue port per host edge, and the surviving-star mask that the
// surgery stages update.
struct StarSystem {
    Graph host;
    int k = 0;
    Graph glued;
    std::vector<Star> stars;
    std::vector<GluePort> ports;
    int port_collisions = 0;  // cannot occur with a simple host; logged anyway
    std::vector<char> alive;

    int star_of(int g_vertex) const { return g_vertex / (k + 1); }
    bool is_center(int g_vertex) const { return g_vertex % (k + 1) == 0; }
    int alive_count() const;
};

// One leaf-leaf edge per host edge, both ports uniform over the k leaves.
// Draw order: host edges lexicographic, lower-endpoint leaf first.
StarSystem glue_stars(const Graph& host, int k, Rng& rng);
StarSystem glue_stars(const Graph& host, int k, std::uint64_t seed);

// Repeatedly removes the smallest-index vertex of a shortest host cycle (and
// its star) until the surviving host has girth >= k or is acyclic. Returns
// the removed host vertices in removal order.
std::vector<int> break_short_cycles(StarSystem& s, int k);

struct RepairStep {
    int leaf = 0;                     // the degree-deficient leaf x_i (vertex of G)
    int star = 0;                     // its star u_s
    std::vector<int> neighbor_stars;  // N: stars its glue edges reach, all removed too
};

struct RepairLog {
    std::vector<RepairStep> steps;
    std::vector<int> transversal;  // the chosen leaves, verified independent transversal
};

// Kills stars until the graph induced by surviving stars has min degree
// >= k; each step removes the star of the lowest-index deficient leaf plus
// every star that leaf's glue edges reach. The chosen leaves are verified to
// form an independent transversal of the original glued graph.
RepairLog repair_min_degree(StarSystem& s, int k);

// The graph induced by surviving stars (vertices relabeled densely, star
// blocks in ascending star order) plus the original-vertex mapping.
struct InducedGraph {
    Graph graph;
    std::vector<int> to_original;  // new index -> vertex of s.glued
};
InducedGraph induced_alive_graph(const StarSystem& s);

// Adds leaf-leaf bridges until connected: each round joins the two
// components containing the lowest star indices through the lowest-index
// leaf of each one's lowest star. Bridges join distinct components, so the
// girth is preserved and degrees only grow.
struct BridgeResult {
    InducedGraph gstar;
    std::vector<std::pair<int, int>> bridges;  // endpoints in gstar labels
};
BridgeResult add_bridges(const StarSystem& s);

// f = 2 on every surviving center, 0 elsewhere; requires >= 2 surviving
// stars and must validate (centers sit pairwise at distance >= 3).
Broadcast center_broadcast(const InducedGraph& gstar, const StarSystem& s);

// Exact maximum independent transversal (independent, no centers, at most
// one leaf per star) over the surviving stars, by budgeted branch and bound
// over one-leaf-per-star choices.
SetSolveResult max_independent_transversal(const StarSystem& s, const SolverOptions& opts = {});

struct ConstructionParams {
    int n = 0;
    int k = 3;
    double epsilon = 0.05;
    std::uint64_t seed = 0;
    SolverOptions solver;
};

struct ConstructionReport {
    std::uint64_t seed = 0;
    int n = 0, k = 0;
    double epsilon = 0.0, p = 0.0;
    int host_edges = 0;
    int port_collisions = 0;
    std::vector<int> removed_short_cycle;  // F
    std::vector<RepairStep> repair_steps;
    int surviving_stars = 0;  // n_ell
    int bridges_added = 0;
    std::optional<int> girth_gstar;  // nullopt = acyclic
    int min_degree_gstar = 0;
    bool connected = false;
    int broadcast_weight = 0;  // 2 * n_ell
    // alpha of G*: exact value, or the soundest available bounds when the
    // solver budget runs out.
    bool alpha_exact = false;
    long long alpha_lower = 0;
    long long alpha_upper = 0;
    double achieved_ratio = 0.0;  // 2*n_ell / alpha (upper bound when inexact)
    bool ratio_exact = false;
    bool degenerate = false;
    std::string degenerate_stage;  // "", "short_cycles", "no_survivors", "single_star"
};

// The full pipeline: sample_host -> glue_stars -> break_short_cycles ->
// repair_min_degree -> add_bridges -> center_broadcast, with the structural
// assertions girth >= k, min degree >= k, connected on every survivor.
// Fully deterministic per seed. Degenerate runs are reported with the stage
// that failed, never retried silently.
ConstructionReport run_construction(const ConstructionParams& params);

}  // namespace bci
