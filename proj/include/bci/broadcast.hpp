#pragma once

#include <string>
#include <vector>

#include "bci/graph.hpp"

namespace bci {

// A vertex-indexed function f: V -> N0 with its cached weight.
// Validity against (B1)/(B2) is a checked state, not guaranteed by
// construction; see validate_broadcast.
struct Broadcast {
    std::vector<int> f;
    int weight = 0;
};

Broadcast make_broadcast(std::vector<int> values);

// Vertices with f(x) > 0, ascending.
std::vector<int> broadcast_support(const Broadcast& b);

// One failed condition:
//   B1  f(u) exceeds ecc(u)          (v is -1)
//   B2  dist(u,v) <= max(f(u), f(v)) for a positive pair u < v
struct BroadcastViolation {
    std::string condition;
    int u = -1;
    int v = -1;
    std::string detail;
};

// Empty result means valid. Throws std::invalid_argument on size mismatch,
// negative values, a stale cached weight, or a disconnected graph (the
// eccentricity in (B1) is undefined there).
std::vector<BroadcastViolation> validate_broadcast(const Graph& g, const Broadcast& b);

bool is_valid_broadcast(const Graph& g, const Broadcast& b);

}  // namespace bci
