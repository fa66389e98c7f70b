#include "bci/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace bci {

DistanceRow bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n)
        throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
    DistanceRow row;
    row.source = source;
    row.dist.assign(static_cast<std::size_t>(n), DistanceRow::unreachable);
    row.dist[source] = 0;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (row.dist[v] == DistanceRow::unreachable) {
                row.dist[v] = row.dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return row;
}

int eccentricity(const Graph& g, int v) {
    DistanceRow row = bfs_distances(g, v);
    int ecc = 0;
    for (int d : row.dist) {
        if (d == DistanceRow::unreachable)
            throw std::invalid_argument("eccentricity undefined: graph is disconnected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("diameter undefined: empty graph");
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) diam = std::max(diam, eccentricity(g, v));
    return diam;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("min degree undefined: empty graph");
    int d = std::numeric_limits<int>::max();
    for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int v : g.neighbors(queue[head]))
                if (label[v] == -1) {
                    label[v] = next;
                    queue.push_back(v);
                }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

Graph square_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        std::vector<int> touched;
        for (int v : g.neighbors(u)) {
            if (v > u && !mark[v]) {
                mark[v] = 1;
                touched.push_back(v);
            }
            for (int w : g.neighbors(v)) {
                if (w > u && !mark[w]) {
                    mark[w] = 1;
                    touched.push_back(w);
                }
            }
        }
        for (int v : touched) {
            edges.emplace_back(u, v);
            mark[v] = 0;
        }
    }
    return Graph(n, edges);
}

namespace {

// One BFS rooted at r; returns the best cycle-length candidate found via a
// non-tree edge, updating (u, w, parents) of the strictly best one.
struct CycleScanState {
    int best = std::numeric_limits<int>::max();
    int cand_u = -1, cand_w = -1;
    std::vector<int> parent_snapshot;
};

void scan_root(const Graph& g, const std::vector<char>* alive, int r, std::vector<int>& dist,
               std::vector<int>& parent, CycleScanState& st) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::vector<int> queue{r};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (alive && !(*alive)[w]) continue;
            if (w == parent[u]) continue;
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else {
                int cand = dist[u] + dist[w] + 1;
                if (cand < st.best) {
                    st.best = cand;
                    st.cand_u = u;
                    st.cand_w = w;
                    st.parent_snapshot = parent;
                }
            }
        }
    }
}

}  // namespace

std::optional<CycleInfo> shortest_cycle(const Graph& g, const std::vector<char>* alive) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    CycleScanState st;
    for (int r = 0; r < n; ++r) {
        if (alive && !(*alive)[r]) continue;
        scan_root(g, alive, r, dist, parent, st);
    }
    if (st.cand_u < 0) return std::nullopt;

    // Rebuild the cycle from the recorded candidate. At the optimum the two
    // root paths share only the root, so the walk is a simple cycle.
    std::vector<int> up, wp;
    for (int x = st.cand_u; x != -1; x = st.parent_snapshot[x]) up.push_back(x);
    for (int x = st.cand_w; x != -1; x = st.parent_snapshot[x]) wp.push_back(x);
    std::reverse(up.begin(), up.end());  // root .. u
    CycleInfo info;
    info.length = st.best;
    info.vertices = up;
    for (std::size_t i = 0; i + 1 < wp.size(); ++i) info.vertices.push_back(wp[i]);  // w .. (root excluded)
    std::vector<int> check = info.vertices;
    std::sort(check.begin(), check.end());
    if (static_cast<int>(info.vertices.size()) != st.best ||
        std::adjacent_find(check.begin(), check.end()) != check.end())
        throw std::logic_error("shortest_cycle: recovered walk is not a simple cycle");
    return info;
}

std::optional<int> girth(const Graph& g) {
    auto c = shortest_cycle(g);
    if (!c) return std::nullopt;
    return c->length;
}

}  // namespace bci
