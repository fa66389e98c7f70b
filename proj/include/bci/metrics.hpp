#pragma once

#include <optional>
#include <vector>

#include "bci/graph.hpp"

namespace bci {

// Shortest-path edge distances from one source vertex.
// Unreachable vertices hold DistanceRow::unreachable.
struct DistanceRow {
    static constexpr int unreachable = -1;
    int source = 0;
    std::vector<int> dist;
};

DistanceRow bfs_distances(const Graph& g, int source);

// Max distance from v; throws std::invalid_argument on disconnected graphs
// (the eccentricity is undefined there).
int eccentricity(const Graph& g, int v);

// Max eccentricity; same connectivity requirement.
int diameter(const Graph& g);

// Minimum degree; throws on the empty graph.
int min_degree(const Graph& g);

// Component id per vertex, numbered by first appearance in index order.
std::vector<int> component_labels(const Graph& g);

bool is_connected(const Graph& g);

// Same vertex set, edge uv iff dist_g(u,v) is 1 or 2.
Graph square_graph(const Graph& g);

// A shortest cycle, if any. When `alive` is given, the search is restricted
// to the induced subgraph on vertices with alive[v] != 0.
// Runs one BFS per vertex; vertices of the returned cycle are listed in
// traversal order.
struct CycleInfo {
    int length = 0;
    std::vector<int> vertices;
};
std::optional<CycleInfo> shortest_cycle(const Graph& g, const std::vector<char>* alive = nullptr);

// Girth; std::nullopt means acyclic.
std::optional<int> girth(const Graph& g);

}  // namespace bci
