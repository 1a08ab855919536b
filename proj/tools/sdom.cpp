// sdom: semitotal domination toolkit
//
// Subcommands: generate, solve, verify, kernelize, stats, decompose, gadget.
// Exit codes: 0 ok, 1 input error, 2 internal invariant breach, 3 verification
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdom/decomposition.hpp"
#include "sdom/gadgets.hpp"
#include "sdom/generators.hpp"
#include "sdom/graph.hpp"
#include "sdom/graph_io.hpp"
#include "sdom/oracle.hpp"
#include "sdom/planar.hpp"
#include "sdom/rules.hpp"

using json = nlohmann::ordered_json;
using namespace sdom;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOpts {
    std::string input = "-";
    std::string output = "-";
    std::string format = "edgelist";
    bool json_out = false;
    bool timings = false;
    std::size_t oracle_bound = kDefaultOracleBound;
};

GraphFormat parse_format(const std::string& f) {
    if (f == "edgelist") return GraphFormat::edgelist;
    if (f == "dimacs") return GraphFormat::dimacs;
    throw ParseError(0, "unknown format '" + f + "'");
}

DominationKind parse_kind(const std::string& k) {
    if (k == "ds") return DominationKind::plain;
    if (k == "tds") return DominationKind::total;
    if (k == "sds") return DominationKind::semitotal;
    throw ParseError(0, "unknown kind '" + k + "'");
}

Graph read_graph(const CommonOpts& opts) {
    GraphFormat fmt = parse_format(opts.format);
    if (opts.input == "-") return load_graph(std::cin, fmt);
    std::ifstream in(opts.input);
    if (!in) throw ParseError(0, "cannot open input '" + opts.input + "'");
    return load_graph(in, fmt);
}

void write_text(const CommonOpts& opts, const std::string& text) {
    if (opts.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw ParseError(0, "cannot open output '" + opts.output + "'");
    out << text;
}

VertexSet read_vertex_set(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open set file '" + path + "'");
    VertexSet s;
    long v;
    while (in >> v) {
        if (!g.has_vertex(static_cast<Vertex>(v))) throw UnknownVertexError(static_cast<Vertex>(v));
        vs_insert(s, static_cast<Vertex>(v));
    }
    return s;
}

json report_header(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

json reduction_report_json(const ReductionReport& rep, bool timings) {
    json j;
    j["input"] = {{"n", rep.input_n}, {"m", rep.input_m}};
    j["output"] = {{"n", rep.output_n}, {"m", rep.output_m}};
    j["effective_applications"] = {
        {"R1", rep.count_r1},           {"R2-case1", rep.count_r2_case1},
        {"R2-case2", rep.count_r2_case2}, {"R2-case3", rep.count_r2_case3},
        {"R3-case1", rep.count_r3_case1}, {"R3-case2", rep.count_r3_case2},
        {"total", rep.total_effective()}};
    j["sweeps"] = rep.sweeps;
    j["vertex_reduction_pct"] = rep.vertex_reduction_pct();
    j["edge_reduction_pct"] = rep.edge_reduction_pct();
    j["post_checks"] = {{"rule1_residue_ok", rep.post_rule1_ok},
                        {"simple_regions_ok", rep.post_region_ok}};
    if (timings) j["wall_ms"] = rep.wall_ms;
    return j;
}

int cmd_generate(const CommonOpts& opts, const std::string& family,
                 const std::vector<std::uint64_t>& params, std::uint64_t seed) {
    static const std::map<std::string, GraphFamily> names = {
        {"path", GraphFamily::path},
        {"cycle", GraphFamily::cycle},
        {"star", GraphFamily::star},
        {"double_star", GraphFamily::double_star},
        {"complete", GraphFamily::complete},
        {"complete_bipartite", GraphFamily::complete_bipartite},
        {"grid", GraphFamily::grid},
        {"random_gnp", GraphFamily::random_gnp},
        {"random_planar", GraphFamily::random_planar},
        {"random_bipartite", GraphFamily::random_bipartite},
        {"random_split", GraphFamily::random_split}};
    auto it = names.find(family);
    if (it == names.end()) throw InvalidParameterError("unknown family '" + family + "'");
    Graph g = generate({it->second, params, seed});
    write_text(opts, serialize_string(g, parse_format(opts.format)));
    return 0;
}

int cmd_solve(const CommonOpts& opts, const std::string& kind_name_str, bool via_kernel,
              std::optional<std::size_t> size_cap) {
    Graph g = read_graph(opts);
    DominationKind kind = parse_kind(kind_name_str);

    std::optional<DominationSolution> solution;
    VertexSet final_set;
    json extra;
    if (via_kernel) {
        if (kind != DominationKind::semitotal)
            throw ParseError(0, "--via-kernel applies to --kind sds only "
                                "(the reduction preserves gamma_t2)");
        ReduceResult red = reduce(g);
        solution = solve_exact(red.graph, kind, size_cap, opts.oracle_bound);
        if (solution) {
            final_set = lift_solution(red.applications, solution->chosen);
            if (kind == DominationKind::semitotal &&
                !verify_domination(g, final_set, DominationKind::semitotal))
                throw InternalInvariantError("lifted kernel solution failed verification");
        }
        extra["kernel"] = {{"n", red.graph.vertex_count()}, {"m", red.graph.edge_count()}};
    } else {
        solution = solve_exact(g, kind, size_cap, opts.oracle_bound);
        if (solution) final_set = solution->chosen;
    }

    if (opts.json_out) {
        json j = report_header("solve");
        j["kind"] = kind_name_str;
        j["via_kernel"] = via_kernel;
        j["feasible"] = solution.has_value();
        if (solution) {
            j["size"] = final_set.size();
            j["set"] = final_set;
        }
        if (!extra.empty()) j.update(extra);
        write_text(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        if (!solution) {
            out << "infeasible\n";
        } else {
            out << "size " << final_set.size() << "\nset";
            for (Vertex v : final_set) out << ' ' << v;
            out << '\n';
        }
        write_text(opts, out.str());
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& kind_name_str,
               const std::string& set_path) {
    Graph g = read_graph(opts);
    DominationKind kind = parse_kind(kind_name_str);
    VertexSet d = read_vertex_set(set_path, g);

    std::string diagnostic = "valid";
    bool ok = true;
    if (auto u = detail::undominated_vertex(g, d); u && kind != DominationKind::total) {
        ok = false;
        diagnostic = "vertex " + std::to_string(*u) + " is not dominated";
    } else if (kind == DominationKind::total) {
        if (auto t = detail::vertex_without_neighbor_in(g, d)) {
            ok = false;
            diagnostic = "vertex " + std::to_string(*t) + " has no neighbor in the set";
        }
    } else if (kind == DominationKind::semitotal) {
        if (auto w = detail::missing_witness(g, d)) {
            ok = false;
            diagnostic = "no witness for vertex " + std::to_string(*w);
        }
    }

    if (opts.json_out) {
        json j = report_header("verify");
        j["kind"] = kind_name_str;
        j["set"] = d;
        j["valid"] = ok;
        j["diagnostic"] = diagnostic;
        write_text(opts, j.dump(2) + "\n");
    } else {
        write_text(opts, diagnostic + "\n");
    }
    return ok ? 0 : 3;
}

int cmd_kernelize(const CommonOpts& opts, std::optional<std::size_t> k,
                  const std::string& graph_out) {
    Graph g = read_graph(opts);
    ReduceResult red = reduce(g);

    bool planar = test_planarity(g).planar;
    bool no_instance = false;
    json bound;
    if (k) {
        bound["k"] = *k;
        bound["threshold"] = kKernelFactor * *k;
        bound["n_reduced"] = red.graph.vertex_count();
        bool pass = kernel_bound_check(red.graph.vertex_count(), *k);
        bound["pass"] = pass;
        if (planar && !pass) {
            // bound failed on a planar instance: emit the canonical single-vertex NO-instance
            red.graph = Graph::build({0}, {});
            no_instance = true;
        }
    }

    std::string graph_text = serialize_string(red.graph, parse_format(opts.format));
    json j = report_header("kernelize");
    j.update(reduction_report_json(red.report, opts.timings));
    j["planar"] = planar;
    if (!bound.empty()) j["kernel_bound"] = bound;
    j["no_instance_emitted"] = no_instance;

    if (!graph_out.empty()) {
        std::ofstream out(graph_out);
        if (!out) throw ParseError(0, "cannot open output '" + graph_out + "'");
        out << graph_text;
    } else {
        j["graph"] = graph_text;
    }

    if (opts.json_out) {
        write_text(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "n " << red.report.input_n << " -> " << red.report.output_n << "\n"
            << "m " << red.report.input_m << " -> " << red.report.output_m << "\n"
            << "effective " << red.report.total_effective() << " in " << red.report.sweeps
            << " sweeps\n";
        if (k) out << "kernel bound " << (bound["pass"].get<bool>() ? "pass" : "fail") << "\n";
        if (no_instance) out << "NO-instance emitted\n";
        if (graph_out.empty()) out << graph_text;
        write_text(opts, out.str());
    }
    return 0;
}

json region_json(const Region& r) {
    json j;
    j["poles"] = {r.pole_v, r.pole_w};
    j["boundary_paths"] = {r.path1, r.path2};
    j["enclosed"] = r.enclosed;
    return j;
}

// Decomposition base set: explicit file, else an oracle-computed optimal sds.
VertexSet decomposition_base(const CommonOpts& opts, const Graph& g, const std::string& set_path) {
    if (!set_path.empty()) return read_vertex_set(set_path, g);
    auto solution = solve_exact(g, DominationKind::semitotal, std::nullopt, opts.oracle_bound);
    if (!solution) throw ParseError(0, "graph has no semitotal dominating set");
    return solution->chosen;
}

int cmd_decompose(const CommonOpts& opts, const std::string& set_path) {
    Graph g = read_graph(opts);
    PlanarityResult pl = test_planarity(g);
    json j = report_header("decompose");
    j["planar"] = pl.planar;
    if (!pl.planar) {
        write_text(opts, j.dump(2) + "\n");
        return 1;
    }
    VertexSet d = decomposition_base(opts, g, set_path);
    j["base_set"] = d;
    if (d.size() < 3) {
        j["decomposition"] = nullptr;
        j["reason"] = "base set smaller than 3";
        write_text(opts, j.dump(2) + "\n");
        return 0;
    }
    RegionDecomposition dec = build_decomposition(g, pl.embedding, d);
    json regions = json::array();
    for (const Region& r : dec.regions) regions.push_back(region_json(r));
    j["regions"] = regions;
    UnderlyingMultigraph mg = underlying_multigraph(dec);
    json edges = json::array();
    for (auto [a, b] : mg.edges) edges.push_back({a, b});
    j["underlying_multigraph"] = {{"vertices", mg.vertices}, {"edges", edges}};
    write_text(opts, j.dump(2) + "\n");
    return 0;
}

int cmd_stats(const CommonOpts& opts, const std::string& set_path, std::optional<std::size_t> k) {
    Graph g = read_graph(opts);
    PlanarityResult pl = test_planarity(g);
    json j = report_header("stats");
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["planar"] = pl.planar;
    if (k) {
        j["kernel_bound"] = {{"k", *k},
                             {"threshold", kKernelFactor * *k},
                             {"pass", kernel_bound_check(g.vertex_count(), *k)}};
    }
    if (!pl.planar) {
        j["decomposition"] = nullptr;
        j["reason"] = "stats require a planar input";
        write_text(opts, j.dump(2) + "\n");
        return 1;
    }
    VertexSet d = decomposition_base(opts, g, set_path);
    j["base_set"] = d;
    if (d.size() < 3) {
        j["decomposition"] = nullptr;
        j["reason"] = "base set smaller than 3";
        write_text(opts, j.dump(2) + "\n");
        return 0;
    }
    RegionDecomposition dec = build_decomposition(g, pl.embedding, d);
    DecompositionStats st = decomposition_stats(g, dec);
    json regions = json::array();
    for (const RegionStat& r : st.regions)
        regions.push_back({{"poles", {r.pole_v, r.pole_w}},
                           {"non_pole_vertices", r.non_pole_vertices},
                           {"size_ok", r.size_ok},
                           {"n1_in_region", r.n1_in_region},
                           {"n1_ok", r.n1_ok}});
    j["decomposition"] = {{"region_count", st.region_count},
                          {"region_count_ok", st.region_count_ok},
                          {"outside_count", st.outside_count},
                          {"outside_bound", st.outside_bound},
                          {"outside_ok", st.outside_ok},
                          {"handshake_sum", st.handshake_sum},
                          {"handshake_ok", st.handshake_ok},
                          {"regions", regions},
                          {"all_pass", st.all_pass()}};
    write_text(opts, j.dump(2) + "\n");
    return 0;
}

int cmd_gadget(const CommonOpts& opts, bool equivalence) {
    Graph g = read_graph(opts);
    auto parts = bipartition(g);
    if (!parts) throw NotBipartiteError();
    if (parts->first.empty() || parts->second.empty()) throw EmptyPartError();
    BipartiteGadgetOutput out = bipartite_gadget(g, parts->first, parts->second);

    json j = report_header("gadget");
    j["parts"] = {{"X", parts->first}, {"Y", parts->second}};
    json roles;
    for (auto [v, role] : out.roles) roles[std::to_string(v)] = role_name(role);
    j["roles"] = roles;
    j["graph"] = serialize_string(out.graph, parse_format(opts.format));
    if (equivalence) {
        GadgetEquivalenceReport rep = check_gadget_equivalence(g, out, opts.oracle_bound);
        j["equivalence"] = {{"gamma_input", rep.gamma_input},
                            {"gamma_t2_output", rep.gamma_t2_output},
                            {"output_feasible", rep.output_feasible},
                            {"matches_plus_two", rep.matches_plus_two}};
    }
    write_text(opts, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semitotal domination kernelization toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    if (const char* env = std::getenv("SDOM_ORACLE_BOUND")) opts.oracle_bound = std::atoi(env);

    auto add_common = [&opts](CLI::App* cmd) {
        cmd->add_option("--input", opts.input, "input graph path, '-' for stdin");
        cmd->add_option("--output", opts.output, "output path, '-' for stdout");
        cmd->add_option("--format", opts.format, "edgelist|dimacs")->default_str("edgelist");
        cmd->add_flag("--json", opts.json_out, "machine-readable JSON output");
        cmd->add_flag("--timings", opts.timings, "include wall-clock timings in reports");
        cmd->add_option("--oracle-bound", opts.oracle_bound, "max n for the exact solver");
    };

    std::string family, kind = "sds", set_path, graph_out;
    std::vector<std::uint64_t> params;
    std::uint64_t seed = 0;
    bool via_kernel = false, equivalence = false;
    std::optional<std::size_t> opt_k, size_cap;
    std::size_t k_value = 0, cap_value = 0;

    auto* c_generate = app.add_subcommand("generate", "emit a named or random graph");
    add_common(c_generate);
    c_generate->add_option("--family", family, "graph family")->required();
    c_generate->add_option("--params", params, "family parameters")->delimiter(',');
    c_generate->add_option("--seed", seed, "random seed");

    auto* c_solve = app.add_subcommand("solve", "exact minimum ds/tds/sds");
    add_common(c_solve);
    c_solve->add_option("--kind", kind, "ds|tds|sds");
    c_solve->add_flag("--via-kernel", via_kernel, "reduce first, solve the kernel, lift back");
    auto* cap_opt = c_solve->add_option("--size-cap", cap_value, "give up beyond this size");

    auto* c_verify = app.add_subcommand("verify", "check a candidate set");
    add_common(c_verify);
    c_verify->add_option("--kind", kind, "ds|tds|sds");
    c_verify->add_option("--set", set_path, "file of vertex ids")->required();

    auto* c_kernelize = app.add_subcommand("kernelize", "apply Rules 1-3 to a fixpoint");
    add_common(c_kernelize);
    auto* k_opt = c_kernelize->add_option("--k", k_value, "parameter for the kernel bound check");
    c_kernelize->add_option("--graph-output", graph_out, "write reduced graph here");

    auto* c_stats = app.add_subcommand("stats", "region decomposition bound verdicts");
    add_common(c_stats);
    c_stats->add_option("--set", set_path, "semitotal dominating set file (else oracle)");
    auto* k_opt2 = c_stats->add_option("--k", k_value, "parameter for the kernel bound check");

    auto* c_decompose = app.add_subcommand("decompose", "maximal D-region decomposition");
    add_common(c_decompose);
    c_decompose->add_option("--set", set_path, "dominating set file (else oracle)");

    auto* c_gadget = app.add_subcommand("gadget", "bipartite hardness gadget");
    add_common(c_gadget);
    c_gadget->add_flag("--equivalence", equivalence, "include the oracle equivalence report");

    CLI11_PARSE(app, argc, argv);
    if (!k_opt->empty() || !k_opt2->empty()) opt_k = k_value;
    if (!cap_opt->empty()) size_cap = cap_value;
    if (opts.oracle_bound > kOracleHardCeiling) opts.oracle_bound = kOracleHardCeiling;

    try {
        if (c_generate->parsed()) return cmd_generate(opts, family, params, seed);
        if (c_solve->parsed()) return cmd_solve(opts, kind, via_kernel, size_cap);
        if (c_verify->parsed()) return cmd_verify(opts, kind, set_path);
        if (c_kernelize->parsed()) return cmd_kernelize(opts, opt_k, graph_out);
        if (c_stats->parsed()) return cmd_stats(opts, set_path, opt_k);
        if (c_decompose->parsed()) return cmd_decompose(opts, set_path);
        if (c_gadget->parsed()) return cmd_gadget(opts, equivalence);
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const OracleBoundExceededError& e) {
        std::cerr << "error: " << e.what() << " (use --via-kernel or raise --oracle-bound)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
