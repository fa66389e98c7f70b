#include "bci/broadcast.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bci/metrics.hpp"

namespace bci {

Broadcast make_broadcast(std::vector<int> values) {
    Broadcast b;
    b.weight = std::accumulate(values.begin(), values.end(), 0);
    b.f = std::move(values);
    return b;
}

std::vector<int> broadcast_support(const Broadcast& b) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(b.f.size()); ++v)
        if (b.f[v] > 0) out.push_back(v);
    return out;
}

std::vector<BroadcastViolation> validate_broadcast(const Graph& g, const Broadcast& b) {
    const int n = g.vertex_count();
    if (static_cast<int>(b.f.size()) != n)
        throw std::invalid_argument("broadcast size does not match graph");
    if (std::any_of(b.f.begin(), b.f.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("broadcast values must be nonnegative");
    if (b.weight != std::accumulate(b.f.begin(), b.f.end(), 0))
        throw std::invalid_argument("broadcast cached weight is stale");
    if (!is_connected(g))
        throw std::invalid_argument("broadcast validation requires a connected graph");

    std::vector<BroadcastViolation> out;
    const std::vector<int> support = broadcast_support(b);
    for (std::size_t i = 0; i < support.size(); ++i) {
        const int x = support[i];
        DistanceRow row = bfs_distances(g, x);
        const int ecc = *std::max_element(row.dist.begin(), row.dist.end());
        if (b.f[x] > ecc)
            out.push_back({"B1", x, -1,
                           "f(" + std::to_string(x) + ")=" + std::to_string(b.f[x]) +
                               " exceeds eccentricity " + std::to_string(ecc)});
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            const int y = support[j];
            const int d = row.dist[y];
            if (d <= std::max(b.f[x], b.f[y]))
                out.push_back({"B2", x, y,
                               "dist(" + std::to_string(x) + "," + std::to_string(y) + ")=" +
                                   std::to_string(d) + " not greater than max(f)=" +
                                   std::to_string(std::max(b.f[x], b.f[y]))});
        }
    }
    return out;
}

bool is_valid_broadcast(const Graph& g, const Broadcast& b) {
    return validate_broadcast(g, b).empty();
}

}  // namespace bci
