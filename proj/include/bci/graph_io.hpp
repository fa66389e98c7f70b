#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bci/graph.hpp"

namespace bci {

enum class GraphFormat { graph6, edgelist };

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;  // e.g. collapsed duplicate edges
};

// graph6: the standard header-less encoding, bit-exact. An optional
// ">>graph6<<" prefix is tolerated on input, never emitted.
//
// edgelist: one "u v" pair per line, 0-indexed; '#' starts a comment.
// A comment of the form "# n=K" pins the vertex count (the serializer
// always writes one, so graphs with isolated vertices round-trip);
// without it, n is the largest index seen plus one. Duplicate edges are
// collapsed with a warning, self-loops rejected.
ParsedGraph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace bci
