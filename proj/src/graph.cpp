#include "bci/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bci {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                    " out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        edge_count_ += static_cast<int>(nb.size());
    }
    edge_count_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

}  // namespace bci
