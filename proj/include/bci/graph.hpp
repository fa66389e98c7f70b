#pragma once

#include <utility>
#include <vector>

namespace bci {

// Immutable simple undirected graph on dense vertex indices 0..n-1.
//
// Neighbor lists are kept sorted ascending; every "smallest index first"
// tie-break in the solvers and constructions relies on that order.
class Graph {
public:
    Graph() = default;

    // Builds the graph from an edge list. Self-loops are rejected with
    // std::invalid_argument, out-of-range endpoints with std::out_of_range.
    // Duplicate edges collapse to a single edge.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    // Binary search on the sorted neighbor list.
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

}  // namespace bci
