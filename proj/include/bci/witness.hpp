#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bci/broadcast.hpp"
#include "bci/graph.hpp"

namespace bci {

// Exact nonnegative rational, used for the xi parameter so that degree and
// cardinality comparisons never hit float boundaries.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational parse(const std::string& text);  // "5/2", "2.5", "2"
    static Rational from_double(double x);           // exact binary-float value
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Thrown when a graph/broadcast pair violates a theorem hypothesis
// (girth, minimum degree, xi range, connectivity, broadcast validity).
struct hypothesis_error : std::runtime_error {
    std::string hypothesis;
    hypothesis_error(std::string hyp, const std::string& msg)
        : std::runtime_error(msg), hypothesis(std::move(hyp)) {}
};

enum class WitnessTheorem { thm1, thm3i, thm3ii };
std::string theorem_tag(WitnessTheorem t);  // "1" | "3i" | "3ii"

struct WitnessEntry {
    int x = 0;                  // broadcaster
    int fx = 0;                 // f(x)
    std::string rule;           // which f(x)-range construction fired
    std::vector<int> path;      // isometric path P(x) when one is used, else {x}
    std::vector<int> set;       // I(x), ascending
};

struct WitnessFamily {
    WitnessTheorem theorem = WitnessTheorem::thm1;
    std::optional<Rational> xi;  // only for thm3ii
    std::vector<WitnessEntry> entries;  // ascending broadcaster
};

// An isometric path x, x_1, ..., x_L with dist(x, x_i) = i for all i.
// Deterministic: the endpoint is the smallest-index vertex at distance
// exactly L, each predecessor the smallest-index neighbor at the right
// distance. Throws when L exceeds ecc(x) or the graph is disconnected.
std::vector<int> shortest_path_of_length(const Graph& g, int x, int length);

// Witness construction "1" (hypotheses: girth >= 6, min degree >= 3):
//   1 <= f <= 2   I(x) = {x}
//   3 <= f <= 5   I(x) = N(x)
//   6 <= f <= 13  I(x) = {y : dist(x,y) in {0,2}}
//   f >= 14       the same plus N(x_{2i+3}) \ {x_{2i+2}} along P(x),
//                 ell = floor((f-9)/4), P(x) of length 2*ell+4
WitnessFamily witness_thm1(const Graph& g, const Broadcast& f);

// Witness construction "3i" (hypotheses: girth >= 6, min degree >= 5):
//   1 <= f <= 2   I(x) = {x}
//   f >= 3        I(x) = N(x) plus N(x_{2i-2}) \ {x_{2i-3}} for i = 2..ell,
//                 ell = floor((f+1)/4), P(x) of length 2*ell-1
WitnessFamily witness_thm3i(const Graph& g, const Broadcast& f);

// Witness construction "3ii" (hypotheses: 2 <= xi < 4, girth >= 4, min degree >= 10/xi):
//   1 <= f <= 2   I(x) = {x}
//   f >= 3        I(x) = union of N(x_{4(i-1)}) for i = 1..ell,
//                 ell = floor((f+5)/8), P(x) of length 4*ell-3
WitnessFamily witness_thm3ii(const Graph& g, const Broadcast& f, const Rational& xi);
WitnessFamily witness_thm3ii(const Graph& g, const Broadcast& f, double xi);

// The per-entry cardinality requirement of the family's theorem: the bound
// as a number, and whether |I(x)| meets it (decided by exact integer
// arithmetic, not by the double).
struct EntryBound {
    double value = 0.0;
    bool satisfied = false;
};
EntryBound witness_entry_bound(const WitnessFamily& fam, const WitnessEntry& e);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Machine-checkable certificate: every verified inequality, plus the alpha
// lower bound the family yields when all checks pass.
struct WitnessCertificate {
    bool valid = false;
    std::vector<CheckResult> checks;
    long long total_size = 0;        // sum of |I(x)|
    long long union_size = 0;        // |union I(x)|
    long long aggregate_bound = 0;   // what total_size must reach (ceiling form)
    long long alpha_lower_bound = 0; // certified alpha >= union_size (0 if invalid)
};

// Checks, in order: (1) every I(x) independent, (2) pairwise disjoint,
// (3) no edge between different sets, (4) per-entry cardinality bound for
// the family's theorem, (5) the aggregate bound. A "support" precheck makes
// sure the entries cover exactly {x : f(x) > 0}.
WitnessCertificate verify_witness(const Graph& g, const Broadcast& f, const WitnessFamily& w);

// Equality-case device: if some x in the packing X has two nonadjacent
// neighbors y,z with (X \ {x}) u {y,z} independent, return that set.
// Throws std::invalid_argument when X is not a packing.
std::optional<std::vector<int>> strict_improvement_check(const Graph& g,
                                                         const std::vector<int>& X);

}  // namespace bci
