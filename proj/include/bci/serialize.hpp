#pragma once

#include <string>

#include <json.hpp>

#include "bci/broadcast.hpp"
#include "bci/extremal.hpp"
#include "bci/solvers.hpp"
#include "bci/witness.hpp"

namespace bci {

// All emitted JSON uses insertion-ordered objects so identical inputs give
// byte-identical output.
using Json = nlohmann::ordered_json;

Json broadcast_to_json(const Broadcast& b);
Json violations_to_json(const std::vector<BroadcastViolation>& violations);

// {parameter, optimum, witness, nodes, budget_hit, wall_ms}; wall_ms is the
// one nondeterministic field, so callers that promise byte-identical reruns
// pass with_wall_ms = false.
Json set_result_to_json(const SetSolveResult& r, const std::string& parameter,
                        bool with_wall_ms = true);
Json broadcast_result_to_json(const BroadcastSolveResult& r, const std::string& parameter,
                              bool with_wall_ms = true);

Json witness_family_to_json(const WitnessFamily& w);
Json certificate_to_json(const WitnessCertificate& c);

Json construction_report_to_json(const ConstructionReport& r);

// One CSV row per construction run; schema-versioned, stable column order.
std::string construction_csv_header();
std::string construction_csv_row(const ConstructionReport& r);

// Shortest round-trip decimal form (what the JSON dump uses), shared by the
// CSV writer so numbers format identically everywhere.
std::string format_double(double v);

}  // namespace bci
