#include "bci/serialize.hpp"

#include <sstream>

namespace bci {

std::string format_double(double v) { return Json(v).dump(); }

Json broadcast_to_json(const Broadcast& b) {
    return Json{{"f", b.f}, {"weight", b.weight}};
}

Json violations_to_json(const std::vector<BroadcastViolation>& violations) {
    Json arr = Json::array();
    for (const auto& v : violations) {
        Json item;
        item["condition"] = v.condition;
        if (v.condition == "B1") {
            item["vertex"] = v.u;
        } else {
            item["u"] = v.u;
            item["v"] = v.v;
        }
        item["detail"] = v.detail;
        arr.push_back(std::move(item));
    }
    return arr;
}

namespace {

template <class R>
Json result_common(const R& r, const std::string& parameter, bool with_wall_ms) {
    Json j;
    j["parameter"] = parameter;
    j["optimum"] = r.optimum;
    j["nodes"] = r.nodes;
    j["budget_hit"] = r.budget_hit;
    if (with_wall_ms) j["wall_ms"] = r.wall_ms;
    return j;
}

}  // namespace

Json set_result_to_json(const SetSolveResult& r, const std::string& parameter, bool with_wall_ms) {
    Json j = result_common(r, parameter, with_wall_ms);
    j["witness"] = r.witness;
    return j;
}

Json broadcast_result_to_json(const BroadcastSolveResult& r, const std::string& parameter,
                              bool with_wall_ms) {
    Json j = result_common(r, parameter, with_wall_ms);
    j["witness"] = broadcast_to_json(r.witness);
    return j;
}

Json witness_family_to_json(const WitnessFamily& w) {
    Json j;
    j["schema"] = 1;
    j["theorem"] = theorem_tag(w.theorem);
    if (w.xi) {
        j["xi"] = Json{{"num", w.xi->num}, {"den", w.xi->den}, {"value", w.xi->value()}};
    }
    Json entries = Json::array();
    for (const auto& e : w.entries) {
        const EntryBound bound = witness_entry_bound(w, e);
        Json item;
        item["x"] = e.x;
        item["f"] = e.fx;
        item["rule"] = e.rule;
        item["path"] = e.path;
        item["set"] = e.set;
        item["size"] = e.set.size();
        item["bound"] = bound.value;
        item["bound_satisfied"] = bound.satisfied;
        entries.push_back(std::move(item));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json certificate_to_json(const WitnessCertificate& c) {
    Json j;
    j["schema"] = 1;
    j["valid"] = c.valid;
    Json checks = Json::array();
    for (const auto& chk : c.checks)
        checks.push_back(Json{{"name", chk.name}, {"ok", chk.ok}, {"detail", chk.detail}});
    j["checks"] = std::move(checks);
    j["total_size"] = c.total_size;
    j["union_size"] = c.union_size;
    j["aggregate_bound"] = c.aggregate_bound;
    j["alpha_lower_bound"] = c.alpha_lower_bound;
    return j;
}

namespace {

Json girth_to_json(const std::optional<int>& g) {
    if (g) return Json(*g);
    return Json("acyclic");
}

}  // namespace

Json construction_report_to_json(const ConstructionReport& r) {
    Json j;
    j["schema"] = 1;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["k"] = r.k;
    j["epsilon"] = r.epsilon;
    j["p"] = r.p;
    j["host_edges"] = r.host_edges;
    j["port_collisions"] = r.port_collisions;
    j["removed_short_cycle"] = r.removed_short_cycle;
    Json steps = Json::array();
    for (const auto& s : r.repair_steps)
        steps.push_back(Json{{"leaf", s.leaf}, {"star", s.star}, {"neighbor_stars", s.neighbor_stars}});
    j["repair_steps"] = std::move(steps);
    j["surviving_stars"] = r.surviving_stars;
    j["degenerate"] = r.degenerate;
    j["degenerate_stage"] = r.degenerate_stage;
    if (!r.degenerate_stage.empty() && r.surviving_stars < 2) return j;  // stages below never ran
    j["bridges_added"] = r.bridges_added;
    j["girth"] = girth_to_json(r.girth_gstar);
    j["min_degree"] = r.min_degree_gstar;
    j["connected"] = r.connected;
    j["broadcast_weight"] = r.broadcast_weight;
    j["alpha"] = Json{{"exact", r.alpha_exact}, {"lower", r.alpha_lower}, {"upper", r.alpha_upper}};
    j["achieved_ratio"] = r.achieved_ratio;
    j["ratio_exact"] = r.ratio_exact;
    return j;
}

std::string construction_csv_header() {
    return "schema,seed,n,k,epsilon,F,ell,n_ell,bridges,girth,mindeg,weight,alpha,alpha_exact,"
           "ratio,degenerate_stage";
}

std::string construction_csv_row(const ConstructionReport& r) {
    std::ostringstream out;
    out << 1 << ',' << r.seed << ',' << r.n << ',' << r.k << ',' << format_double(r.epsilon) << ','
        << r.removed_short_cycle.size() << ',' << r.repair_steps.size() << ',' << r.surviving_stars
        << ',';
    const bool completed = r.surviving_stars >= 2;
    if (completed) {
        out << r.bridges_added << ',';
        if (r.girth_gstar)
            out << *r.girth_gstar << ',';
        else
            out << "acyclic,";
        out << r.min_degree_gstar << ',' << r.broadcast_weight << ','
            << (r.alpha_exact ? r.alpha_lower : r.alpha_upper) << ',' << (r.alpha_exact ? 1 : 0)
            << ',' << format_double(r.achieved_ratio) << ',';
    } else {
        out << ",,,,,,,";  // bridges, girth, mindeg, weight, alpha, alpha_exact, ratio
    }
    out << r.degenerate_stage;
    return out.str();
}

}  // namespace bci
