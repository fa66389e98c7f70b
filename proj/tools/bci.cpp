// bci: exact broadcast-independence, independence, and packing numbers of
// small graphs, proof-witness extraction, and the randomized high-girth
// star construction. See README.md for formats and exit codes.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bci/extremal.hpp"
#include "bci/graph_io.hpp"
#include "bci/metrics.hpp"
#include "bci/serialize.hpp"
#include "bci/solvers.hpp"
#include "bci/witness.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_broadcast = 1;
constexpr int exit_input_error = 2;
constexpr int exit_disconnected = 3;
constexpr int exit_hypothesis = 4;
constexpr int exit_certificate = 5;
constexpr int exit_internal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file: " + path);
    return read_stream(f);
}

bci::GraphFormat pick_format(const std::string& format, const std::string& path) {
    if (format == "graph6") return bci::GraphFormat::graph6;
    if (format == "edgelist") return bci::GraphFormat::edgelist;
    // auto: sniff the extension, default to edgelist
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return bci::GraphFormat::graph6;
    if (path.size() >= 7 && path.substr(path.size() - 7) == ".graph6") return bci::GraphFormat::graph6;
    return bci::GraphFormat::edgelist;
}

bci::Graph load_graph(const std::string& path, const std::string& format) {
    bci::ParsedGraph parsed = bci::parse_graph(read_input(path), pick_format(format, path));
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    return parsed.graph;
}

// Whitespace-separated integers, one per vertex; '#' comments.
bci::Broadcast load_broadcast(const std::string& path, int n) {
    std::string text = read_input(path);
    std::istringstream in(text);
    std::string line;
    std::vector<int> values;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long v;
        while (ls >> v) values.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(values.size()) != n)
        throw UsageError("broadcast file holds " + std::to_string(values.size()) +
                         " values, graph has " + std::to_string(n) + " vertices");
    return bci::make_broadcast(values);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + out_path);
    f << content;
}

// --config <file>: JSON object whose keys are the long option names. A key
// also given on the command line is a conflict and an error — the config
// never silently overrides anything.
std::vector<std::string> apply_config(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config requires a file path");
            if (!config_path.empty()) throw UsageError("--config given twice");
            config_path = args[++i];
        } else {
            out.push_back(args[i]);
        }
    }
    if (config_path.empty()) return out;
    std::ifstream f(config_path);
    if (!f) throw UsageError("cannot open config file: " + config_path);
    bci::Json cfg;
    try {
        cfg = bci::Json::parse(read_stream(f));
    } catch (const std::exception& e) {
        throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        if (key == "config") throw UsageError("config may not nest another config");
        const std::string flag = "--" + key;
        if (std::find(out.begin(), out.end(), flag) != out.end())
            throw UsageError("option " + flag + " given both on the command line and in " +
                             config_path);
        out.push_back(flag);
        out.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out;
}

struct CommonInput {
    std::string input;
    std::string format = "auto";
    std::string out;
    std::int64_t budget_ms = 60000;
};

void add_common(CLI::App* cmd, CommonInput& c) {
    cmd->add_option("--input", c.input, "graph file, or - for stdin")->required();
    cmd->add_option("--format", c.format, "graph6 | edgelist | auto (default: by extension)")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cmd->add_option("--out", c.out, "output file (default: stdout)");
    cmd->add_option("--budget-ms", c.budget_ms, "wall-clock budget per solve, 0 = unlimited");
}

int cmd_compute(const CommonInput& c) {
    bci::Graph g = load_graph(c.input, c.format);
    if (g.vertex_count() == 0) throw UsageError("empty graph");
    if (!bci::is_connected(g)) {
        std::cerr << "error: input graph is disconnected (alpha_b and diameter undefined)\n";
        return exit_disconnected;
    }
    bci::SolverOptions opts;
    opts.budget_ms = c.budget_ms;

    bci::Json j;
    j["schema"] = 1;
    j["input"] = bci::Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    j["connected"] = true;
    auto gir = bci::girth(g);
    j["girth"] = gir ? bci::Json(*gir) : bci::Json("acyclic");
    j["min_degree"] = bci::min_degree(g);
    j["diameter"] = bci::diameter(g);
    j["alpha"] = bci::set_result_to_json(bci::max_independent_set(g, opts), "alpha", false);
    j["rho"] = bci::set_result_to_json(bci::max_packing(g, opts), "rho", false);
    j["alpha_b"] = bci::broadcast_result_to_json(bci::alpha_b_exact(g, opts), "alpha_b", false);
    write_output(c.out, j.dump(2) + "\n");
    return exit_ok;
}

int cmd_verify(const CommonInput& c, const std::string& broadcast_path) {
    bci::Graph g = load_graph(c.input, c.format);
    if (!bci::is_connected(g)) {
        std::cerr << "error: input graph is disconnected\n";
        return exit_disconnected;
    }
    bci::Broadcast b = load_broadcast(broadcast_path, g.vertex_count());
    auto violations = bci::validate_broadcast(g, b);
    bci::Json j;
    j["schema"] = 1;
    j["valid"] = violations.empty();
    j["weight"] = b.weight;
    j["violations"] = bci::violations_to_json(violations);
    write_output(c.out, j.dump(2) + "\n");
    return violations.empty() ? exit_ok : exit_invalid_broadcast;
}

int cmd_witness(const CommonInput& c, const std::string& theorem, const std::string& xi_text,
                const std::string& broadcast_path) {
    bci::Graph g = load_graph(c.input, c.format);
    if (!bci::is_connected(g)) {
        std::cerr << "error: input graph is disconnected\n";
        return exit_disconnected;
    }
    bci::SolverOptions opts;
    opts.budget_ms = c.budget_ms;

    bci::Broadcast b;
    bool from_solver = false, solver_budget_hit = false;
    if (!broadcast_path.empty()) {
        b = load_broadcast(broadcast_path, g.vertex_count());
        if (auto violations = bci::validate_broadcast(g, b); !violations.empty()) {
            std::cerr << "error: hypothesis violated: broadcast: supplied broadcast is invalid\n";
            return exit_hypothesis;
        }
    } else {
        auto solved = bci::alpha_b_exact(g, opts);
        b = solved.witness;
        from_solver = true;
        solver_budget_hit = solved.budget_hit;
    }

    bci::WitnessFamily fam;
    try {
        if (theorem == "1") {
            fam = bci::witness_thm1(g, b);
        } else if (theorem == "3i") {
            fam = bci::witness_thm3i(g, b);
        } else {
            if (xi_text.empty()) throw UsageError("--xi is required for --theorem 3ii");
            fam = bci::witness_thm3ii(g, b, bci::Rational::parse(xi_text));
        }
    } catch (const bci::hypothesis_error& e) {
        std::cerr << "error: hypothesis violated: " << e.hypothesis << ": " << e.what() << "\n";
        return exit_hypothesis;
    }

    bci::WitnessCertificate cert = bci::verify_witness(g, b, fam);
    bci::Json j;
    j["schema"] = 1;
    j["broadcast"] = bci::broadcast_to_json(b);
    j["broadcast_source"] = from_solver ? "solver" : "file";
    if (from_solver) j["broadcast_optimal"] = !solver_budget_hit;
    j["family"] = bci::witness_family_to_json(fam);
    j["certificate"] = bci::certificate_to_json(cert);
    write_output(c.out, j.dump(2) + "\n");
    if (!cert.valid) {
        std::cerr << "error: witness certificate failed\n";
        return exit_certificate;
    }
    return exit_ok;
}

struct GenArgs {
    int n = 0, k = 3;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::int64_t budget_ms = 60000;
    int retry = 0;
    std::uint64_t seeds = 0;
    std::string out;
};

bci::ConstructionReport run_one(const GenArgs& a, std::uint64_t seed) {
    bci::ConstructionParams p;
    p.n = a.n;
    p.k = a.k;
    p.epsilon = a.epsilon;
    p.seed = seed;
    p.solver.budget_ms = a.budget_ms;
    return bci::run_construction(p);
}

int cmd_generate(const GenArgs& a) {
    bci::ConstructionReport r = run_one(a, a.seed);
    for (int attempt = 1; attempt <= a.retry && r.degenerate; ++attempt)
        r = run_one(a, a.seed + static_cast<std::uint64_t>(attempt));
    write_output(a.out, bci::construction_report_to_json(r).dump(2) + "\n");
    return exit_ok;
}

int cmd_sweep(const GenArgs& a) {
    std::ostringstream csv;
    csv << bci::construction_csv_header() << "\n";
    std::vector<double> ratios;
    std::uint64_t degenerate = 0;
    for (std::uint64_t i = 0; i < a.seeds; ++i) {
        bci::ConstructionReport r = run_one(a, a.seed + i);
        csv << bci::construction_csv_row(r) << "\n";
        if (r.degenerate)
            ++degenerate;
        else
            ratios.push_back(r.achieved_ratio);
    }
    std::sort(ratios.begin(), ratios.end());

    bci::Json summary;
    summary["schema"] = 1;
    summary["n"] = a.n;
    summary["k"] = a.k;
    summary["epsilon"] = a.epsilon;
    summary["seed"] = a.seed;
    summary["seeds"] = a.seeds;
    summary["degenerate_runs"] = degenerate;
    summary["degenerate_fraction"] =
        a.seeds == 0 ? 0.0 : static_cast<double>(degenerate) / static_cast<double>(a.seeds);
    summary["nondegenerate_runs"] = ratios.size();
    if (ratios.empty()) {
        summary["ratio_quantiles"] = nullptr;
        summary["max_ratio"] = nullptr;
    } else {
        const std::size_t m = ratios.size();
        auto at = [&](double q) { return ratios[static_cast<std::size_t>(
            static_cast<double>(m - 1) * q)]; };
        const double median = (ratios[(m - 1) / 2] + ratios[m / 2]) / 2.0;
        summary["ratio_quantiles"] = bci::Json{{"min", ratios.front()},
                                               {"q25", at(0.25)},
                                               {"median", median},
                                               {"q75", at(0.75)},
                                               {"max", ratios.back()}};
        summary["max_ratio"] = ratios.back();
    }
    summary["reference_ratio"] = 2.0 * (1.0 - 1.0 / static_cast<double>(a.k));

    if (a.out.empty()) {
        std::cout << csv.str();
        std::cerr << summary.dump(2) << "\n";
    } else {
        write_output(a.out, csv.str());
        std::cout << summary.dump(2) << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact broadcast independence toolkit"};
    app.require_subcommand(1);

    CommonInput compute_in, verify_in, witness_in;
    std::string verify_broadcast, witness_broadcast, witness_theorem, witness_xi;
    GenArgs gen, sweep;

    CLI::App* compute = app.add_subcommand("compute", "alpha, rho, alpha_b and graph parameters");
    add_common(compute, compute_in);

    CLI::App* verify = app.add_subcommand("verify", "check a broadcast against (B1)/(B2)");
    add_common(verify, verify_in);
    verify->add_option("--broadcast", verify_broadcast, "broadcast value file")->required();

    CLI::App* witness = app.add_subcommand("witness", "extract and certify proof witness sets");
    add_common(witness, witness_in);
    witness->add_option("--theorem", witness_theorem, "construction: 1 | 3i | 3ii")
        ->required()
        ->check(CLI::IsMember({"1", "3i", "3ii"}));
    witness->add_option("--xi", witness_xi, "xi in [2,4) for --theorem 3ii, e.g. 2.5 or 5/2");
    witness->add_option("--broadcast", witness_broadcast,
                        "broadcast value file (default: solve alpha_b exactly)");

    CLI::App* generate = app.add_subcommand("generate", "one randomized star-construction run");
    generate->add_option("--n", gen.n, "host graph order")->required();
    generate->add_option("--k", gen.k, "girth / min degree target, k >= 3")->required();
    generate->add_option("--epsilon", gen.epsilon, "host density exponent, 0 < eps < 1/k^2")
        ->required();
    generate->add_option("--seed", gen.seed, "rng seed (default 0)");
    generate->add_option("--budget-ms", gen.budget_ms, "solver budget per run");
    generate->add_option("--retry", gen.retry, "retry degenerate runs with incremented seeds");
    generate->add_option("--out", gen.out, "output file (default: stdout)");

    CLI::App* sweepc = app.add_subcommand("sweep", "many seeded runs, CSV plus summary");
    sweepc->add_option("--n", sweep.n, "host graph order")->required();
    sweepc->add_option("--k", sweep.k, "girth / min degree target, k >= 3")->required();
    sweepc->add_option("--epsilon", sweep.epsilon, "host density exponent")->required();
    sweepc->add_option("--seed", sweep.seed, "base seed (default 0)");
    sweepc->add_option("--seeds", sweep.seeds, "number of consecutive seeds")->required();
    sweepc->add_option("--budget-ms", sweep.budget_ms, "solver budget per run");
    sweepc->add_option("--out", sweep.out, "CSV file; summary JSON then goes to stdout");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = apply_config(args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        std::vector<const char*> cargs;
        cargs.push_back(argv[0]);
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_in);
        if (verify->parsed()) return cmd_verify(verify_in, verify_broadcast);
        if (witness->parsed())
            return cmd_witness(witness_in, witness_theorem, witness_xi, witness_broadcast);
        if (generate->parsed()) return cmd_generate(gen);
        if (sweepc->parsed()) return cmd_sweep(sweep);
    } catch (const bci::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_ok;
}
