#include "bci/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bci/metrics.hpp"

namespace bci {

namespace {

long long gcd_ll(long long a, long long b) { return b == 0 ? a : gcd_ll(b, a % b); }

long long parse_ll(const std::string& text) {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters in number: " + text);
    return v;
}

Rational normalized(long long num, long long den) {
    if (num < 0) throw std::invalid_argument("rational must be nonnegative");
    const long long g = gcd_ll(num == 0 ? den : num, den);
    return Rational{num / g, den / g};
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    long long num = 0, den = 1;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = parse_ll(text.substr(0, slash));
        den = parse_ll(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        if (frac.size() > 12) throw std::invalid_argument("too many decimal digits");
        num = parse_ll(text.substr(0, dot) + frac);
        den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    } else {
        num = parse_ll(text);
    }
    return normalized(num, den);
}

Rational Rational::from_double(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("rational must be a finite nonnegative value");
    long long den = 1;
    while (x != std::floor(x)) {
        x *= 2.0;
        den *= 2;
        if (den > (1LL << 60)) throw std::invalid_argument("value not representable");
    }
    return normalized(static_cast<long long>(x), den);
}

std::string theorem_tag(WitnessTheorem t) {
    switch (t) {
        case WitnessTheorem::thm1: return "1";
        case WitnessTheorem::thm3i: return "3i";
        case WitnessTheorem::thm3ii: return "3ii";
    }
    return "?";
}

std::vector<int> shortest_path_of_length(const Graph& g, int x, int length) {
    if (length < 0) throw std::invalid_argument("path length must be nonnegative");
    DistanceRow row = bfs_distances(g, x);
    int ecc = 0;
    for (int d : row.dist) {
        if (d == DistanceRow::unreachable)
            throw std::invalid_argument("shortest_path_of_length requires a connected graph");
        ecc = std::max(ecc, d);
    }
    if (length > ecc)
        throw std::invalid_argument("requested path length " + std::to_string(length) +
                                    " exceeds eccentricity " + std::to_string(ecc));
    int endpoint = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (row.dist[v] == length) {
            endpoint = v;
            break;
        }
    std::vector<int> path(static_cast<std::size_t>(length) + 1);
    path[static_cast<std::size_t>(length)] = endpoint;
    for (int d = length - 1; d >= 0; --d) {
        const int cur = path[static_cast<std::size_t>(d) + 1];
        int pred = -1;
        for (int w : g.neighbors(cur))
            if (row.dist[w] == d) {
                pred = w;
                break;
            }
        path[static_cast<std::size_t>(d)] = pred;
    }
    return path;
}

namespace {

void require_hypotheses(const Graph& g, const Broadcast& f, int min_girth, int min_deg) {
    if (!is_connected(g)) throw hypothesis_error("connectivity", "graph is disconnected");
    if (auto gir = girth(g); gir && *gir < min_girth)
        throw hypothesis_error("girth", "girth " + std::to_string(*gir) + " < " +
                                            std::to_string(min_girth));
    if (const int d = min_degree(g); d < min_deg)
        throw hypothesis_error("min_degree", "minimum degree " + std::to_string(d) + " < " +
                                                 std::to_string(min_deg));
    if (!validate_broadcast(g, f).empty())
        throw hypothesis_error("broadcast", "broadcast violates (B1)/(B2)");
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// {y : dist(x,y) in {0,2}}
std::vector<int> self_plus_sphere2(const Graph& g, int x) {
    DistanceRow row = bfs_distances(g, x);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (row.dist[v] == 0 || row.dist[v] == 2) out.push_back(v);
    return out;
}

}  // namespace

WitnessFamily witness_thm1(const Graph& g, const Broadcast& f) {
    require_hypotheses(g, f, 6, 3);
    WitnessFamily fam;
    fam.theorem = WitnessTheorem::thm1;
    for (int x : broadcast_support(f)) {
        WitnessEntry e;
        e.x = x;
        e.fx = f.f[x];
        if (e.fx <= 2) {
            e.rule = "singleton";
            e.path = {x};
            e.set = {x};
        } else if (e.fx <= 5) {
            e.rule = "neighborhood";
            e.path = {x};
            e.set = g.neighbors(x);
        } else if (e.fx <= 13) {
            e.rule = "sphere2";
            e.path = {x};
            e.set = self_plus_sphere2(g, x);
        } else {
            e.rule = "sphere2_path";
            const int ell = (e.fx - 9) / 4;
            // (B1) makes the path exist: 2*ell+4 <= (f(x)-1)/2 < f(x) <= ecc(x).
            e.path = shortest_path_of_length(g, x, 2 * ell + 4);
            std::vector<int> set = self_plus_sphere2(g, x);
            for (int i = 1; i <= ell; ++i) {
                const int anchor = e.path[static_cast<std::size_t>(2 * i + 3)];
                const int excluded = e.path[static_cast<std::size_t>(2 * i + 2)];
                for (int y : g.neighbors(anchor))
                    if (y != excluded) set.push_back(y);
            }
            e.set = sorted_unique(std::move(set));
        }
        fam.entries.push_back(std::move(e));
    }
    return fam;
}

WitnessFamily witness_thm3i(const Graph& g, const Broadcast& f) {
    require_hypotheses(g, f, 6, 5);
    WitnessFamily fam;
    fam.theorem = WitnessTheorem::thm3i;
    for (int x : broadcast_support(f)) {
        WitnessEntry e;
        e.x = x;
        e.fx = f.f[x];
        if (e.fx <= 2) {
            e.rule = "singleton";
            e.path = {x};
            e.set = {x};
        } else {
            e.rule = "neighborhood_path";
            const int ell = (e.fx + 1) / 4;
            e.path = shortest_path_of_length(g, x, 2 * ell - 1);
            std::vector<int> set = g.neighbors(x);
            for (int i = 2; i <= ell; ++i) {
                const int anchor = e.path[static_cast<std::size_t>(2 * i - 2)];
                const int excluded = e.path[static_cast<std::size_t>(2 * i - 3)];
                for (int y : g.neighbors(anchor))
                    if (y != excluded) set.push_back(y);
            }
            e.set = sorted_unique(std::move(set));
        }
        fam.entries.push_back(std::move(e));
    }
    return fam;
}

WitnessFamily witness_thm3ii(const Graph& g, const Broadcast& f, const Rational& xi) {
    if (xi.num < 2 * xi.den || xi.num >= 4 * xi.den)
        throw std::invalid_argument("xi must lie in [2, 4)");
    // delta >= 10/xi checked as 10*den <= delta*num (exact cross multiplication)
    if (!is_connected(g)) throw hypothesis_error("connectivity", "graph is disconnected");
    if (auto gir = girth(g); gir && *gir < 4)
        throw hypothesis_error("girth", "girth " + std::to_string(*gir) + " < 4");
    const int delta = min_degree(g);
    if (static_cast<__int128>(delta) * xi.num < static_cast<__int128>(10) * xi.den)
        throw hypothesis_error("min_degree", "minimum degree " + std::to_string(delta) +
                                                 " below 10/xi with xi=" + xi.str());
    if (!validate_broadcast(g, f).empty())
        throw hypothesis_error("broadcast", "broadcast violates (B1)/(B2)");

    WitnessFamily fam;
    fam.theorem = WitnessTheorem::thm3ii;
    fam.xi = xi;
    for (int x : broadcast_support(f)) {
        WitnessEntry e;
        e.x = x;
        e.fx = f.f[x];
        if (e.fx <= 2) {
            e.rule = "singleton";
            e.path = {x};
            e.set = {x};
        } else {
            e.rule = "spaced_neighborhoods";
            const int ell = (e.fx + 5) / 8;
            e.path = shortest_path_of_length(g, x, 4 * ell - 3);
            std::vector<int> set;
            for (int i = 1; i <= ell; ++i)
                for (int y : g.neighbors(e.path[static_cast<std::size_t>(4 * (i - 1))]))
                    set.push_back(y);
            e.set = sorted_unique(std::move(set));
        }
        fam.entries.push_back(std::move(e));
    }
    return fam;
}

WitnessFamily witness_thm3ii(const Graph& g, const Broadcast& f, double xi) {
    return witness_thm3ii(g, f, Rational::from_double(xi));
}

EntryBound witness_entry_bound(const WitnessFamily& fam, const WitnessEntry& e) {
    const long long size = static_cast<long long>(e.set.size());
    switch (fam.theorem) {
        case WitnessTheorem::thm1:
            // strictly more than f/2, except equality at f = 2
            if (e.fx == 2) return {1.0, size >= 1};
            return {e.fx / 2.0, 2 * size > e.fx};
        case WitnessTheorem::thm3i:
            if (e.fx == 1) return {1.0, size >= 1};
            return {static_cast<double>(e.fx - 1), size >= e.fx - 1};
        case WitnessTheorem::thm3ii: {
            const Rational xi = *fam.xi;
            const bool ok =
                static_cast<__int128>(size) * xi.num >= static_cast<__int128>(e.fx) * xi.den;
            return {static_cast<double>(e.fx) / xi.value(), ok};
        }
    }
    return {0.0, false};
}

WitnessCertificate verify_witness(const Graph& g, const Broadcast& f, const WitnessFamily& w) {
    WitnessCertificate cert;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        cert.checks.push_back({name, ok, detail});
        return ok;
    };

    // Precheck: entries cover exactly the support, in ascending order.
    std::vector<int> entry_vertices;
    bool shape_ok = static_cast<int>(f.f.size()) == g.vertex_count();
    for (const auto& e : w.entries) {
        entry_vertices.push_back(e.x);
        if (e.x < 0 || e.x >= g.vertex_count() || f.f[static_cast<std::size_t>(e.x)] != e.fx)
            shape_ok = false;
    }
    shape_ok = shape_ok && entry_vertices == broadcast_support(f) &&
               (w.theorem != WitnessTheorem::thm3ii || w.xi.has_value());
    bool all_ok = add("support", shape_ok, "entries match {x : f(x) > 0}");
    if (!shape_ok) return cert;

    // (1) each I(x) independent
    bool ok1 = true;
    std::string detail1 = "every I(x) is independent";
    for (const auto& e : w.entries) {
        for (std::size_t i = 0; i < e.set.size() && ok1; ++i)
            for (std::size_t j = i + 1; j < e.set.size(); ++j)
                if (g.has_edge(e.set[i], e.set[j])) {
                    ok1 = false;
                    detail1 = "edge inside I(" + std::to_string(e.x) + "): " +
                              std::to_string(e.set[i]) + "-" + std::to_string(e.set[j]);
                    break;
                }
        if (!ok1) break;
    }
    all_ok = add("independent_sets", ok1, detail1) && all_ok;

    // (2) pairwise disjoint
    bool ok2 = true;
    std::string detail2 = "sets are pairwise disjoint";
    {
        std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
        for (const auto& e : w.entries) {
            for (int v : e.set) {
                if (v < 0 || v >= g.vertex_count()) {
                    ok2 = false;
                    detail2 = "vertex out of range in I(" + std::to_string(e.x) + ")";
                    break;
                }
                if (owner[static_cast<std::size_t>(v)] != -1) {
                    ok2 = false;
                    detail2 = "vertex " + std::to_string(v) + " shared by I(" +
                              std::to_string(owner[static_cast<std::size_t>(v)]) + ") and I(" +
                              std::to_string(e.x) + ")";
                    break;
                }
                owner[static_cast<std::size_t>(v)] = e.x;
            }
            if (!ok2) break;
        }
    }
    all_ok = add("disjoint", ok2, detail2) && all_ok;

    // (3) no edge between different sets
    bool ok3 = true;
    std::string detail3 = "no edges join different sets";
    if (ok2) {
        std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
        for (const auto& e : w.entries)
            for (int v : e.set) owner[static_cast<std::size_t>(v)] = e.x;
        for (const auto& e : w.entries) {
            for (int v : e.set) {
                for (int u : g.neighbors(v)) {
                    const int o = owner[static_cast<std::size_t>(u)];
                    if (o != -1 && o != e.x) {
                        ok3 = false;
                        detail3 = "edge " + std::to_string(v) + "-" + std::to_string(u) +
                                  " joins I(" + std::to_string(e.x) + ") and I(" + std::to_string(o) +
                                  ")";
                        break;
                    }
                }
                if (!ok3) break;
            }
            if (!ok3) break;
        }
    } else {
        ok3 = false;
        detail3 = "skipped: sets are not disjoint";
    }
    all_ok = add("no_cross_edges", ok3, detail3) && all_ok;

    // (4) per-entry cardinality bounds
    bool ok4 = true;
    std::string detail4 = "per-entry cardinality bounds hold";
    for (const auto& e : w.entries) {
        const EntryBound bound = witness_entry_bound(w, e);
        if (!bound.satisfied) {
            ok4 = false;
            detail4 = "entry x=" + std::to_string(e.x) + ": |I| = " + std::to_string(e.set.size()) +
                      " misses its bound " + std::to_string(bound.value);
            break;
        }
    }
    all_ok = add("entry_bounds", ok4, detail4) && all_ok;

    // (5) aggregate bound
    cert.total_size = 0;
    for (const auto& e : w.entries) cert.total_size += static_cast<long long>(e.set.size());
    {
        std::set<int> uni;
        for (const auto& e : w.entries) uni.insert(e.set.begin(), e.set.end());
        cert.union_size = static_cast<long long>(uni.size());
    }
    bool ok5 = false;
    std::string detail5;
    const long long weight = f.weight;
    switch (w.theorem) {
        case WitnessTheorem::thm1:
            cert.aggregate_bound = (weight + 1) / 2;
            ok5 = 2 * cert.total_size >= weight;
            detail5 = "2*sum|I| = " + std::to_string(2 * cert.total_size) +
                      " >= weight = " + std::to_string(weight);
            break;
        case WitnessTheorem::thm3i: {
            long long big = 0;  // |X \ X1|
            for (const auto& e : w.entries)
                if (e.fx >= 2) ++big;
            cert.aggregate_bound = weight - big;
            ok5 = cert.total_size >= cert.aggregate_bound;
            detail5 = "sum|I| = " + std::to_string(cert.total_size) +
                      " >= weight - |X\\X1| = " + std::to_string(cert.aggregate_bound);
            break;
        }
        case WitnessTheorem::thm3ii: {
            const Rational xi = *w.xi;
            cert.aggregate_bound = static_cast<long long>(
                (static_cast<__int128>(weight) * xi.den + xi.num - 1) / xi.num);  // ceil(weight/xi)
            ok5 = static_cast<__int128>(cert.total_size) * xi.num >=
                  static_cast<__int128>(weight) * xi.den;
            detail5 = "sum|I|*xi >= weight with sum|I| = " + std::to_string(cert.total_size) +
                      ", weight = " + std::to_string(weight) + ", xi = " + xi.str();
            break;
        }
    }
    all_ok = add("aggregate_bound", ok5, detail5) && all_ok;

    cert.valid = all_ok;
    cert.alpha_lower_bound = all_ok ? cert.union_size : 0;
    return cert;
}

std::optional<std::vector<int>> strict_improvement_check(const Graph& g,
                                                         const std::vector<int>& X) {
    // X must be a packing: pairwise distance >= 3.
    std::vector<DistanceRow> rows;
    rows.reserve(X.size());
    for (int x : X) rows.push_back(bfs_distances(g, x));
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) {
            const int d = rows[i].dist[X[j]];
            if (X[i] == X[j] || (d != DistanceRow::unreachable && d < 3))
                throw std::invalid_argument("X is not a packing");
        }

    for (std::size_t i = 0; i < X.size(); ++i) {
        const int x = X[i];
        const auto& nb = g.neighbors(x);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const int y = nb[a], z = nb[b];
                if (g.has_edge(y, z)) continue;
                std::vector<int> candidate;
                for (int other : X)
                    if (other != x) candidate.push_back(other);
                candidate.push_back(y);
                candidate.push_back(z);
                std::sort(candidate.begin(), candidate.end());
                bool independent = true;
                for (std::size_t p = 0; p < candidate.size() && independent; ++p)
                    for (std::size_t q = p + 1; q < candidate.size(); ++q)
                        if (g.has_edge(candidate[p], candidate[q])) {
                            independent = false;
                            break;
                        }
                if (independent) return candidate;
            }
    }
    return std::nullopt;
}

}  // namespace bci
