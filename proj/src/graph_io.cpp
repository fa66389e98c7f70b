#include "bci/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <utility>

namespace bci {

namespace {

constexpr int g6_bias = 63;   // printable offset
constexpr int g6_max = 126;

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int g6_byte(const std::string& s, std::size_t i) {
    if (i >= s.size()) throw parse_error("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < g6_bias || c > g6_max)
        throw parse_error("graph6: byte out of range at position " + std::to_string(i));
    return c - g6_bias;
}

ParsedGraph parse_graph6(const std::string& raw) {
    std::string s = strip(raw);
    const std::string optional_header = ">>graph6<<";
    if (s.rfind(optional_header, 0) == 0) s = s.substr(optional_header.size());
    if (s.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (s[0] == '~') {
        if (s.size() > 1 && s[1] == '~') {
            pos = 2;
            for (int k = 0; k < 6; ++k) n = (n << 6) | g6_byte(s, pos++);
        } else {
            pos = 1;
            for (int k = 0; k < 3; ++k) n = (n << 6) | g6_byte(s, pos++);
            if (n < 63) throw parse_error("graph6: malformed header (non-canonical size)");
        }
    } else {
        n = g6_byte(s, 0);
        pos = 1;
    }
    if (n > 1000000) throw parse_error("graph6: vertex count too large");

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw parse_error(s.size() - pos < need ? "graph6: truncated input"
                                                : "graph6: trailing data");
    std::vector<std::pair<int, int>> edges;
    std::int64_t bit = 0;
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (have == 0) {
                cur = g6_byte(s, pos++);
                have = 6;
            }
            if (cur & (1 << (have - 1))) edges.emplace_back(i, j);
            --have;
        }
    }
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw parse_error("graph6: nonzero padding bits");
    return ParsedGraph{Graph(static_cast<int>(n), edges), {}};
}

std::string serialize_graph6(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + g6_bias));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + g6_bias));
    }
    int cur = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + g6_bias));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + g6_bias));
    return out;
}

ParsedGraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int duplicates = 0;
    long long declared_n = -1;
    int max_index = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string data = line;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            data = line.substr(0, hash);
            std::string comment = strip(line.substr(hash + 1));
            if (declared_n < 0 && comment.rfind("n=", 0) == 0) {
                try {
                    declared_n = std::stoll(comment.substr(2));
                } catch (const std::exception&) {
                    throw parse_error("edgelist: bad n= directive on line " + std::to_string(lineno));
                }
                if (declared_n < 0) throw parse_error("edgelist: negative n= directive");
            }
        }
        if (strip(data).empty()) continue;
        std::istringstream ls(data);
        long long u, v;
        std::string rest;
        if (!(ls >> u))
            throw parse_error("edgelist: expected \"u v\" on line " + std::to_string(lineno));
        if (!(ls >> v) || (ls >> rest))
            throw parse_error("edgelist: expected \"u v\" on line " + std::to_string(lineno));
        if (u < 0 || v < 0)
            throw parse_error("edgelist: negative vertex index on line " + std::to_string(lineno));
        if (u == v)
            throw parse_error("edgelist: self-loop on line " + std::to_string(lineno));
        if (u > 10000000 || v > 10000000)
            throw parse_error("edgelist: vertex index too large on line " + std::to_string(lineno));
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second) {
            ++duplicates;
            continue;
        }
        edges.emplace_back(lo, hi);
        max_index = std::max(max_index, hi);
    }
    long long n = declared_n >= 0 ? declared_n : static_cast<long long>(max_index) + 1;
    if (declared_n >= 0 && max_index >= declared_n)
        throw parse_error("edgelist: vertex index " + std::to_string(max_index) +
                          " out of range for declared n=" + std::to_string(declared_n));
    ParsedGraph out{Graph(static_cast<int>(n), edges), {}};
    if (duplicates > 0)
        out.warnings.push_back(std::to_string(duplicates) + " duplicate edge(s) collapsed");
    return out;
}

std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace

ParsedGraph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? serialize_graph6(g) : serialize_edgelist(g);
}

}  // namespace bci
