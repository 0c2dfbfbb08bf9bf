// cyclepack: exact directed-cycle packing analysis on small multigraphs.
//
// Subcommands:
//   analyze     packing numbers, spectra, incidence-set model, algebra checks
//   detect      is some directed cycle through a vertex / an edge?
//   paths       edge-disjoint u->v path numbers via contraction
//   flow        max-flow value against the path numbers of the unit graph
//   undirected  undirected packing numbers, graded pieces, mod-2 detectors
//
// Exit codes: 0 ok, 2 parse/usage error, 3 resource guard exceeded,
// 4 internal disagreement (a checked identity failed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclepack/report.hpp"

namespace {

struct cli_state {
    std::string input;
    std::string json_out = "-";
    std::string mode = "both";
    std::string algebraic = "on";
    bool timings = false;
    std::uint64_t max_cycles = 0;
    std::uint64_t max_collections = 0;
    std::uint64_t spair_budget = 0;
    std::uint64_t seed = 0;
    // detect
    int vertex = -1;
    int edge = -1;
    bool has_vertex = false;
    bool has_edge = false;
    // paths
    int from = -1;
    int to = -1;
};

cyclepack::report_options make_options(const cli_state& st) {
    cyclepack::report_options opts;
    opts.mode = st.mode;
    opts.algebraic = st.algebraic == "on";
    opts.timings = st.timings;
    if (st.max_cycles) opts.lim.max_cycles = st.max_cycles;
    if (st.max_collections) opts.lim.max_collection_nodes = st.max_collections;
    if (st.spair_budget) opts.lim.max_spairs = st.spair_budget;
    return opts;
}

void add_common(CLI::App* cmd, cli_state& st) {
    cmd->add_option("--input", st.input, "input file (.edges, .dot, or .flow)")->required();
    cmd->add_option("--json", st.json_out, "report destination: a path, or - for stdout");
    cmd->add_option("--max-cycles", st.max_cycles, "cap on enumerated simple cycles");
    cmd->add_option("--max-collections", st.max_collections,
                    "cap on nodes of the collection search");
    cmd->add_option("--spair-budget", st.spair_budget, "cap on processed S-pairs");
    cmd->add_option("--seed", st.seed, "echoed into the report; random corpora only");
    cmd->add_flag("--timings", st.timings, "add per-section wall times (non-reproducible)");
}

int emit(const cyclepack::command_result& res, const cli_state& st) {
    std::string text = res.report.dump(2);
    text.push_back('\n');
    if (st.json_out == "-") {
        std::cout << text;
    } else {
        std::ofstream out(st.json_out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << st.json_out << "\n";
            return 2;
        }
        out << text;
    }
    if (res.guard_tripped) return 3;
    if (!res.agree) return 4;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact directed-cycle packing analysis"};
    app.require_subcommand(1);
    cli_state st;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a directed graph");
    add_common(analyze, st);
    analyze->add_option("--mode", st.mode, "plain | strong | both")
        ->check(CLI::IsMember({"plain", "strong", "both"}));
    analyze->add_option("--algebraic", st.algebraic, "on | off")
        ->check(CLI::IsMember({"on", "off"}));

    CLI::App* detect = app.add_subcommand("detect", "cycle through a vertex or an edge?");
    add_common(detect, st);
    auto* ov = detect->add_option("--vertex", st.vertex, "vertex id to probe");
    auto* oe = detect->add_option("--edge", st.edge, "edge id to probe");
    detect->add_option("--algebraic", st.algebraic, "on | off")
        ->check(CLI::IsMember({"on", "off"}));

    CLI::App* paths = app.add_subcommand("paths", "edge-disjoint path numbers u -> v");
    add_common(paths, st);
    paths->add_option("--from", st.from, "path source vertex id")->required();
    paths->add_option("--to", st.to, "path target vertex id")->required();
    paths->add_option("--algebraic", st.algebraic, "on | off")
        ->check(CLI::IsMember({"on", "off"}));

    CLI::App* flow = app.add_subcommand("flow", "max flow vs. unit-graph path numbers");
    add_common(flow, st);

    CLI::App* undirected = app.add_subcommand("undirected", "undirected cycle analysis");
    add_common(undirected, st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    st.has_vertex = ov->count() > 0;
    st.has_edge = oe->count() > 0;

    auto opts = make_options(st);
    try {
        cyclepack::command_result res;
        if (analyze->parsed()) {
            auto parsed = cyclepack::load_directed(st.input);
            res = cyclepack::cmd_analyze(parsed.graph, parsed.warnings, opts);
        } else if (detect->parsed()) {
            if (st.has_vertex == st.has_edge) {
                std::cerr << "detect needs exactly one of --vertex / --edge\n";
                return 2;
            }
            auto parsed = cyclepack::load_directed(st.input);
            res = st.has_vertex
                      ? cyclepack::cmd_detect_vertex(parsed.graph, st.vertex, opts)
                      : cyclepack::cmd_detect_edge(parsed.graph, st.edge, opts);
        } else if (paths->parsed()) {
            auto parsed = cyclepack::load_directed(st.input);
            res = cyclepack::cmd_paths(parsed.graph, st.from, st.to, opts);
        } else if (flow->parsed()) {
            auto net = cyclepack::parse_flow(cyclepack::read_file(st.input));
            res = cyclepack::cmd_flow(net, opts);
        } else {
            auto parsed = cyclepack::load_undirected(st.input);
            res = cyclepack::cmd_undirected(parsed.graph, parsed.warnings, opts);
        }
        res.report["input"] = st.input;
        res.report["seed"] = st.seed;
        return emit(res, st);
    } catch (const cyclepack::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const cyclepack::guard_error& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const cyclepack::internal_error& e) {
        std::cerr << "internal disagreement: " << e.what() << "\n";
        return 4;
    }
}
