#include "bci/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "bci/bitset.hpp"
#include "bci/metrics.hpp"

namespace bci {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v).dist);
    return d;
}

// ---------------------------------------------------------------------------
// Maximum independent set
// ---------------------------------------------------------------------------

struct MisSolver {
    int n;
    std::vector<Bitset> adj;
    Clock::time_point deadline;
    bool has_deadline;
    bool stop = false;
    std::uint64_t nodes = 0;
    std::uint64_t ticks = 0;

    MisSolver(const Graph& g, const SolverOptions& opts) : n(g.vertex_count()) {
        adj.assign(static_cast<std::size_t>(n), Bitset(n));
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) adj[v].set(u);
        has_deadline = opts.budget_ms > 0;
        deadline = Clock::now() + std::chrono::milliseconds(opts.budget_ms);
    }

    bool out_of_time() {
        if (stop) return true;
        if (!has_deadline) return false;
        if ((++ticks & 0x3FF) != 0) return false;
        if (Clock::now() >= deadline) stop = true;
        return stop;
    }

    // Greedy clique cover of P; the number of cliques bounds alpha within P.
    int clique_cover_ub(const Bitset& P) const {
        Bitset left = P;
        int cliques = 0;
        for (int v = left.first_set(); v >= 0; v = left.first_set()) {
            ++cliques;
            left.reset(v);
            Bitset cand = left;
            cand &= adj[v];
            for (int u = cand.first_set(); u >= 0; u = cand.first_set()) {
                left.reset(u);
                cand.reset(u);
                cand &= adj[u];
            }
        }
        return cliques;
    }

    // Vertices of degree <= 1 inside P always belong to some maximum
    // independent set; take them greedily.
    void reduce(Bitset& P, Bitset& cur) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (int v : P.to_vector()) {
                if (!P.test(v)) continue;
                const int d = adj[v].count_and(P);
                if (d == 0) {
                    cur.set(v);
                    P.reset(v);
                    changed = true;
                } else if (d == 1) {
                    Bitset nb = adj[v];
                    nb &= P;
                    cur.set(v);
                    P.reset(v);
                    P.reset(nb.first_set());
                    changed = true;
                }
            }
        }
    }

    int pick_pivot(const Bitset& P) const {
        int pivot = -1, best_deg = -1;
        P.for_each([&](int v) {
            const int d = adj[v].count_and(P);
            if (d > best_deg) {
                best_deg = d;
                pivot = v;
            }
        });
        return pivot;
    }

    // Connected components of the subgraph induced by P, ascending by their
    // smallest vertex.
    std::vector<Bitset> split_components(const Bitset& P) const {
        std::vector<Bitset> comps;
        Bitset left = P;
        for (int v = left.first_set(); v >= 0; v = left.first_set()) {
            Bitset comp(n);
            comp.set(v);
            std::vector<int> frontier{v};
            while (!frontier.empty()) {
                const int u = frontier.back();
                frontier.pop_back();
                Bitset next = adj[u];
                next &= left;
                next = next.and_not(comp);
                next.for_each([&](int w) {
                    comp.set(w);
                    frontier.push_back(w);
                });
            }
            left = left.and_not(comp);
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // Min-degree greedy independent set; seeds incumbents so budget-hit
    // results still carry a sensible lower bound.
    Bitset greedy_in(Bitset P) const {
        Bitset out(n);
        while (!P.none()) {
            int best_v = -1, best_d = n + 1;
            P.for_each([&](int v) {
                const int d = adj[v].count_and(P);
                if (d < best_d) {
                    best_d = d;
                    best_v = v;
                }
            });
            out.set(best_v);
            P = P.and_not(adj[best_v]);
            P.reset(best_v);
        }
        return out;
    }

    // Exact maximum independent set within P (own incumbent); splits into
    // connected components, which collapses sparse instances. On budget
    // expiry the partial answer is still a valid independent set.
    std::pair<int, Bitset> solve(Bitset P) {
        Bitset base(n);
        reduce(P, base);
        if (P.none()) return {base.count(), base};
        auto comps = split_components(P);
        if (comps.size() > 1) {
            int total = base.count();
            for (auto& comp : comps) {
                auto [sz, set] = solve(std::move(comp));
                total += sz;
                set.for_each([&](int v) { base.set(v); });
                if (stop) break;
            }
            return {total, base};
        }
        int local_best = 0;
        Bitset local_set(n);
        branch(std::move(P), Bitset(n), local_best, local_set);
        base.for_each([&](int v) { local_set.set(v); });
        return {base.count() + local_best, local_set};
    }

    void branch(Bitset P, Bitset cur, int& best, Bitset& best_found) {
        if (out_of_time()) return;
        ++nodes;
        reduce(P, cur);
        if (P.none()) {
            const int size = cur.count();
            if (size > best) {
                best = size;
                best_found = cur;
            }
            return;
        }
        const int cur_size = cur.count();
        if (cur_size + clique_cover_ub(P) <= best) return;
        auto comps = split_components(P);
        if (comps.size() > 1) {
            for (auto& comp : comps) {
                auto [sz, set] = solve(std::move(comp));
                (void)sz;
                set.for_each([&](int v) { cur.set(v); });
                if (stop) break;
            }
            const int size = cur.count();
            if (size > best) {
                best = size;
                best_found = cur;
            }
            return;
        }
        const int pivot = pick_pivot(P);
        Bitset P1 = P.and_not(adj[pivot]);
        P1.reset(pivot);
        Bitset cur1 = cur;
        cur1.set(pivot);
        branch(std::move(P1), std::move(cur1), best, best_found);
        P.reset(pivot);
        branch(std::move(P), std::move(cur), best, best_found);
    }

    // Is there an independent set of size >= need inside P? Early exit on
    // first success.
    bool decide(Bitset P, int need) {
        if (need <= 0) return true;
        if (out_of_time()) return false;
        ++nodes;
        Bitset cur(n);
        reduce(P, cur);
        const int gained = cur.count();
        if (gained >= need) return true;
        if (P.none()) return false;
        auto comps = split_components(P);
        if (comps.size() > 1) {
            std::vector<int> ubs;
            int ub_rest = 0;
            for (const auto& comp : comps) {
                ubs.push_back(clique_cover_ub(comp));
                ub_rest += ubs.back();
            }
            if (gained + ub_rest < need) return false;
            int total = gained;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                ub_rest -= ubs[i];
                total += solve(std::move(comps[i])).first;
                if (total >= need) return true;
                if (total + ub_rest < need || stop) return false;
            }
            return false;
        }
        if (gained + clique_cover_ub(P) < need) return false;
        const int pivot = pick_pivot(P);
        Bitset P1 = P.and_not(adj[pivot]);
        P1.reset(pivot);
        if (decide(std::move(P1), need - gained - 1)) return true;
        P.reset(pivot);
        return decide(std::move(P), need - gained);
    }
};

SetSolveResult solve_mis(const Graph& g, const SolverOptions& opts) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("independent set solver requires at least one vertex");
    const auto t0 = Clock::now();
    MisSolver s(g, opts);
    Bitset all(s.n);
    for (int v = 0; v < s.n; ++v) all.set(v);
    auto [optimum, found] = s.solve(all);
    const bool search_hit_budget = s.stop;
    if (search_hit_budget) {
        // Keep the better of the truncated search and a plain greedy floor.
        Bitset greedy = s.greedy_in(all);
        if (greedy.count() > optimum) {
            optimum = greedy.count();
            found = greedy;
        }
    }

    SetSolveResult r;
    r.optimum = optimum;
    r.budget_hit = search_hit_budget;
    r.witness = found.to_vector();

    if (!search_hit_budget) {
        // Lexicographically smallest optimal set: decide vertex by vertex.
        std::vector<int> chosen;
        Bitset pool = all;
        for (int v = 0; v < s.n && !s.stop; ++v) {
            if (!pool.test(v)) continue;
            Bitset rest = pool.and_not(s.adj[v]);
            rest.reset(v);
            if (s.decide(rest, r.optimum - static_cast<int>(chosen.size()) - 1)) {
                chosen.push_back(v);
                pool = rest;
            } else {
                pool.reset(v);
            }
        }
        if (!s.stop) {
            if (static_cast<int>(chosen.size()) != r.optimum)
                throw std::logic_error("lex-min refinement lost the optimum");
            r.witness = chosen;
        }
    }
    r.nodes = s.nodes;
    r.wall_ms = ms_since(t0);
    return r;
}

// ---------------------------------------------------------------------------
// Broadcast solvers
// ---------------------------------------------------------------------------

std::vector<int> eccentricities_connected(const std::vector<std::vector<int>>& dist) {
    std::vector<int> ecc(dist.size());
    for (std::size_t v = 0; v < dist.size(); ++v) {
        int e = 0;
        for (int d : dist[v]) {
            if (d == DistanceRow::unreachable)
                throw std::invalid_argument("alpha_b requires a connected graph");
            e = std::max(e, d);
        }
        ecc[v] = e;
    }
    return ecc;
}

struct AlphaBSolver {
    int n;
    std::vector<std::vector<int>> dist;
    std::vector<int> ecc;
    std::vector<int> order;  // branch order: descending eccentricity, then index
    std::vector<int> cap;    // current value cap per vertex (unassigned ones)
    std::vector<int> f;
    long long weight = 0;
    long long best_w = -1;
    std::vector<int> best_f;
    std::uint64_t nodes = 0;
    std::uint64_t ticks = 0;
    Clock::time_point deadline;
    bool has_deadline;
    bool stop = false;

    struct TrailEntry {
        int y, old_cap;
    };
    std::vector<TrailEntry> trail;

    AlphaBSolver(const Graph& g, const SolverOptions& opts)
        : n(g.vertex_count()), dist(all_pairs_distances(g)), ecc(eccentricities_connected(dist)) {
        order.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return ecc[a] != ecc[b] ? ecc[a] > ecc[b] : a < b; });
        cap = ecc;
        f.assign(static_cast<std::size_t>(n), 0);
        has_deadline = opts.budget_ms > 0;
        deadline = Clock::now() + std::chrono::milliseconds(opts.budget_ms);
    }

    bool out_of_time() {
        if (stop) return true;
        if (!has_deadline) return false;
        if ((++ticks & 0x3FF) != 0) return false;
        if (Clock::now() >= deadline) stop = true;
        return stop;
    }

    // Assigning f(v)=val caps every later vertex y at dist(v,y)-1 and rules
    // out positive values entirely when dist(v,y) <= val; exactly (B2).
    long long propagate(const std::vector<int>& vertices, std::size_t from, int v, int val) {
        long long freed = 0;
        for (std::size_t j = from; j < vertices.size(); ++j) {
            const int y = vertices[j];
            const int d = dist[v][y];
            const int nc = d <= val ? 0 : std::min(cap[y], d - 1);
            if (nc < cap[y]) {
                trail.push_back({y, cap[y]});
                freed += cap[y] - nc;
                cap[y] = nc;
            }
        }
        return freed;
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            cap[trail.back().y] = trail.back().old_cap;
            trail.pop_back();
        }
    }

    // Main branch and bound over `order`; rem = sum of caps of unassigned.
    void search(std::size_t idx, long long rem) {
        if (out_of_time()) return;
        ++nodes;
        if (idx == order.size()) {
            if (weight > best_w) {
                best_w = weight;
                best_f = f;
            }
            return;
        }
        if (weight + rem <= best_w) return;
        const int v = order[idx];
        const int cv = cap[v];
        const long long rem_wo_v = rem - cv;
        for (int val = cv; val >= 0; --val) {
            const std::size_t mark = trail.size();
            long long freed = 0;
            if (val > 0) freed = propagate(order, idx + 1, v, val);
            f[v] = val;
            weight += val;
            search(idx + 1, rem_wo_v - freed);
            weight -= val;
            f[v] = 0;
            undo(mark);
        }
    }

    // Can positions idx..n-1 of `vertices` complete to total weight >= target?
    bool decide(const std::vector<int>& vertices, std::size_t idx, long long w, long long rem,
                long long target) {
        if (out_of_time()) return false;
        ++nodes;
        if (w >= target) return true;  // zeros always complete validly
        if (w + rem < target) return false;
        if (idx == vertices.size()) return false;
        const int v = vertices[idx];
        const int cv = cap[v];
        const long long rem_wo_v = rem - cv;
        for (int val = cv; val >= 0; --val) {
            const std::size_t mark = trail.size();
            long long freed = 0;
            if (val > 0) freed = propagate(vertices, idx + 1, v, val);
            const bool ok = decide(vertices, idx + 1, w + val, rem_wo_v - freed, target);
            undo(mark);
            if (ok) return true;
        }
        return false;
    }
};

BroadcastSolveResult solve_alpha_b_exact(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("alpha_b requires at least one vertex");
    const auto t0 = Clock::now();

    AlphaBSolver s(g, opts);

    // Seed the incumbent: the diametral broadcast gives a strong lower bound
    // before any branching happens.
    Broadcast seed = diametral_broadcast(g, opts);
    s.best_w = seed.weight;
    s.best_f = seed.f;

    long long rem0 = 0;
    for (int v = 0; v < n; ++v) rem0 += s.cap[v];
    s.search(0, rem0);
    const bool search_hit_budget = s.stop;

    BroadcastSolveResult r;
    r.optimum = static_cast<int>(s.best_w);
    r.budget_hit = search_hit_budget;
    Broadcast found = make_broadcast(s.best_f);

    if (!search_hit_budget) {
        // Lexicographically smallest optimal assignment, built value by value
        // in vertex index order.
        std::vector<int> index_order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) index_order[v] = v;
        s.cap = s.ecc;
        s.trail.clear();
        std::vector<int> lex(static_cast<std::size_t>(n), 0);
        long long w = 0;
        bool complete = true;
        for (int v = 0; v < n && !s.stop; ++v) {
            long long rem_after = 0;
            for (int y = v + 1; y < n; ++y) rem_after += s.cap[y];
            bool committed = false;
            for (int val = 0; val <= s.cap[v]; ++val) {
                const std::size_t mark = s.trail.size();
                long long freed = 0;
                if (val > 0) freed = s.propagate(index_order, static_cast<std::size_t>(v) + 1, v, val);
                if (s.decide(index_order, static_cast<std::size_t>(v) + 1, w + val, rem_after - freed,
                             s.best_w)) {
                    lex[v] = val;
                    w += val;
                    committed = true;
                    break;  // keep the propagation on the trail
                }
                s.undo(mark);
            }
            if (!committed) {
                complete = false;
                break;
            }
        }
        if (!s.stop && complete) {
            if (w != s.best_w) throw std::logic_error("lex-min refinement lost the optimum");
            found = make_broadcast(lex);
        }
    }

    if (!is_valid_broadcast(g, found))
        throw std::logic_error("alpha_b witness failed validation");
    r.witness = std::move(found);
    r.nodes = s.nodes;
    r.wall_ms = ms_since(t0);
    return r;
}

}  // namespace

SetSolveResult max_independent_set(const Graph& g, const SolverOptions& opts) {
    return solve_mis(g, opts);
}

int greedy_clique_cover_bound(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    MisSolver s(g, SolverOptions{});
    Bitset all(s.n);
    for (int v = 0; v < s.n; ++v) all.set(v);
    return s.clique_cover_ub(all);
}

SetSolveResult max_packing(const Graph& g, const SolverOptions& opts) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("packing solver requires at least one vertex");
    SetSolveResult r = solve_mis(square_graph(g), opts);
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        DistanceRow row = bfs_distances(g, r.witness[i]);
        for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
            const int d = row.dist[r.witness[j]];
            if (d != DistanceRow::unreachable && d < 3)
                throw std::logic_error("packing witness has a pair at distance < 3");
        }
    }
    return r;
}

BroadcastSolveResult alpha_b_bruteforce(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("alpha_b requires at least one vertex");
    if (n > opts.bruteforce_cap)
        throw std::invalid_argument("alpha_b_bruteforce: vertex cap " +
                                    std::to_string(opts.bruteforce_cap) + " exceeded");
    const auto t0 = Clock::now();
    const auto dist = all_pairs_distances(g);
    const auto ecc = eccentricities_connected(dist);

    std::vector<int> f(static_cast<std::size_t>(n), 0), best_f = f;
    long long weight = 0, best_w = -1;
    std::uint64_t nodes = 0, ticks = 0;
    bool stop = false;
    const bool has_deadline = opts.budget_ms > 0;
    const auto deadline = Clock::now() + std::chrono::milliseconds(opts.budget_ms);

    auto out_of_time = [&]() {
        if (stop) return true;
        if (!has_deadline) return false;
        if ((++ticks & 0x3FF) != 0) return false;
        if (Clock::now() >= deadline) stop = true;
        return stop;
    };

    // Plain lexicographic enumeration; a prefix whose positive values already
    // break (B2) extends to no valid broadcast, so it is cut.
    auto rec = [&](auto&& self, int v) -> void {
        if (out_of_time()) return;
        ++nodes;
        if (v == n) {
            if (weight > best_w) {
                best_w = weight;
                best_f = f;
            }
            return;
        }
        int vmax = ecc[v];
        for (int u = 0; u < v; ++u) {
            if (f[u] > 0) {
                const int d = dist[u][v];
                if (d <= f[u]) {
                    vmax = 0;
                    break;
                }
                vmax = std::min(vmax, d - 1);
            }
        }
        for (int val = 0; val <= vmax; ++val) {
            f[v] = val;
            weight += val;
            self(self, v + 1);
            weight -= val;
            f[v] = 0;
        }
    };
    rec(rec, 0);

    BroadcastSolveResult r;
    r.optimum = static_cast<int>(best_w);
    r.witness = make_broadcast(best_f);
    r.nodes = nodes;
    r.budget_hit = stop;
    r.wall_ms = ms_since(t0);
    return r;
}

BroadcastSolveResult alpha_b_exact(const Graph& g, const SolverOptions& opts) {
    return solve_alpha_b_exact(g, opts);
}

Broadcast diametral_broadcast(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("diametral_broadcast requires at least one vertex");
    if (!is_connected(g))
        throw std::invalid_argument("diametral_broadcast requires a connected graph");
    if (n == 1) return make_broadcast({0});  // ecc 0 forces the zero broadcast

    SetSolveResult mis = max_independent_set(g, opts);
    std::vector<int> fa(static_cast<std::size_t>(n), 0);
    for (int v : mis.witness) fa[v] = 1;

    int diam = 0;
    std::vector<int> ecc(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        ecc[v] = eccentricity(g, v);
        diam = std::max(diam, ecc[v]);
    }
    int peripheral = 0;
    while (ecc[peripheral] != diam) ++peripheral;
    std::vector<int> fb(static_cast<std::size_t>(n), 0);
    fb[peripheral] = diam;

    Broadcast a = make_broadcast(std::move(fa));
    Broadcast b = make_broadcast(std::move(fb));
    Broadcast best = a.weight >= b.weight ? std::move(a) : std::move(b);
    if (!is_valid_broadcast(g, best))
        throw std::logic_error("diametral broadcast failed validation");
    return best;
}

}  // namespace bci
