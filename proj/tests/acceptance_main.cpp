// Acceptance runner: one line per criterion, nonzero exit if any fails.
//
// Every comparison pits the library against the independent brute-force
// oracles in tests/oracle.hpp or against a second in-library route that
// shares no code with the first.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclepack/cycles.hpp"
#include "cyclepack/flow.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/groebner.hpp"
#include "cyclepack/hilbert.hpp"
#include "cyclepack/homology.hpp"
#include "cyclepack/incidence_set.hpp"
#include "cyclepack/relations.hpp"
#include "cyclepack/report.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace cyclepack;

namespace {

struct outcome {
    bool pass = true;
    std::string detail;
};

std::vector<int> edge_vars(const directed_graph& g) {
    std::vector<int> vars;
    for (const auto& e : g.edges()) vars.push_back(e.id);
    return vars;
}

std::vector<polynomial> ideal_gens(const directed_graph& g) {
    return incidence_relations(g).nonzero();
}

// ---------------------------------------------------------------------------
// Shared survey over the main corpus: exhaustive multigraphs with <= 4 edges
// on <= 4 vertices, plus 200 seeded random graphs with <= 7 edges.  Criteria
// 1-4 all read from these rows.

struct survey_row {
    directed_graph g;
    oracle::spectrum orc_plain;
    oracle::spectrum orc_strong;
    spectrum lib_strong;
    strong_via_double_result dbl;
    incidence_model model_plain;
    incidence_model model_strong;
    dimension_report algebra;
};

const std::vector<survey_row>& main_corpus() {
    static std::vector<survey_row> rows = [] {
        std::vector<directed_graph> graphs = corpus::all_directed(4, 4);
        std::mt19937 rng(20250825);
        std::uniform_int_distribution<int> num_edges(5, 7);
        int accepted = 0, attempts = 0;
        while (accepted < 200 && attempts < 2000) {
            ++attempts;
            auto g = corpus::random_directed(rng, 5, num_edges(rng));
            if (oracle::cycles(g).size() > 20) continue;  // oracle scan guard
            graphs.push_back(g);
            ++accepted;
        }
        std::vector<survey_row> out;
        out.reserve(graphs.size());
        for (auto& g : graphs) {
            survey_row r;
            r.orc_plain = oracle::spectrum_of(g, packing_mode::edge_disjoint);
            r.orc_strong = oracle::spectrum_of(g, packing_mode::vertex_disjoint);
            r.lib_strong = cycle_spectrum(g, packing_mode::vertex_disjoint);
            r.dbl = strong_via_double(g);
            r.model_plain = build_incidence_set(g, packing_mode::edge_disjoint);
            r.model_strong = build_incidence_set(g, packing_mode::vertex_disjoint);
            r.algebra = dimension_of(buchberger(ideal_gens(g), edge_vars(g)));
            r.g = std::move(g);
            out.push_back(std::move(r));
        }
        return out;
    }();
    return rows;
}

// Criterion 1: model dimension = alpha - 1 and Krull dimension = alpha,
// against the oracle alpha, on the whole survey corpus.
outcome criterion_dimension() {
    outcome res;
    std::size_t n = 0;
    for (const auto& r : main_corpus()) {
        ++n;
        int a = r.orc_plain.alpha;
        if (dimension(r.model_plain) != a - 1) {
            res.pass = false;
            res.detail = "model dimension mismatch on graph #" + std::to_string(n);
            return res;
        }
        if (r.algebra.dimension != a) {
            res.pass = false;
            res.detail = "Krull dimension mismatch on graph #" + std::to_string(n);
            return res;
        }
    }
    res.detail = std::to_string(n) + " graphs (exhaustive <=4 edges + 200 random <=7 edges)";
    return res;
}

// Criterion 2: model degree and per-dimension counts equal the oracle
// spectrum; Hilbert degree bounds the top count from above, equality logged.
outcome criterion_degree_spectrum() {
    outcome res;
    std::size_t n = 0, equal_hilbert = 0;
    for (const auto& r : main_corpus()) {
        ++n;
        const auto& gamma = r.orc_plain.gamma;
        int a = r.orc_plain.alpha;
        long gamma_top = static_cast<long>(gamma.at(a));
        if (r.model_plain.components.empty() != (a == 0)) {
            res.pass = false;
            res.detail = "empty model but cycles exist, graph #" + std::to_string(n);
            return res;
        }
        if (!r.model_plain.components.empty()) {
            auto deg = degree_and_counts(r.model_plain);
            if (deg.degree != gamma_top) {
                res.pass = false;
                res.detail = "degree != top spectrum count on graph #" + std::to_string(n);
                return res;
            }
            std::map<int, long long> shifted;
            for (const auto& [k, cnt] : gamma)
                if (k >= 1) shifted[k - 1] = cnt;
            if (deg.counts != shifted) {
                res.pass = false;
                res.detail = "count map != shifted spectrum on graph #" + std::to_string(n);
                return res;
            }
        }
        if (r.algebra.hilbert_degree < gamma_top) {
            res.pass = false;
            res.detail = "Hilbert degree below top count on graph #" + std::to_string(n);
            return res;
        }
        if (r.algebra.hilbert_degree == gamma_top) ++equal_hilbert;
    }
    std::ostringstream os;
    os << n << " graphs; Hilbert degree equality " << equal_hilbert << "/" << n << " ("
       << std::fixed << std::setprecision(1)
       << 100.0 * static_cast<double>(equal_hilbert) / static_cast<double>(n) << "%)";
    res.detail = os.str();
    return res;
}

// Criterion 3: vertex-disjoint quantities equal both the oracle and the
// doubled-graph route; the strong model equals its projected construction
// (asserted inside build_incidence_set, which ran for every row).
outcome criterion_strong_route() {
    outcome res;
    std::size_t n = 0;
    for (const auto& r : main_corpus()) {
        ++n;
        if (r.lib_strong.alpha() != r.orc_strong.alpha ||
            r.dbl.alpha_strong != r.orc_strong.alpha) {
            res.pass = false;
            res.detail = "strong alpha mismatch on graph #" + std::to_string(n);
            return res;
        }
        if (r.lib_strong.gamma != r.orc_strong.gamma ||
            r.dbl.gamma_strong != r.orc_strong.gamma) {
            res.pass = false;
            res.detail = "strong spectrum mismatch on graph #" + std::to_string(n);
            return res;
        }
    }
    res.detail = std::to_string(n) + " graphs; direct model == projected model throughout";
    return res;
}

// Criterion 4: the variety flag is exactly "every cycle fits one maximal
// collection", i.e. cycle count == alpha; a strong variety forces the plain
// and strong models to coincide.
outcome criterion_variety() {
    outcome res;
    std::size_t n = 0, strong_varieties = 0;
    for (const auto& r : main_corpus()) {
        ++n;
        long long cnt = static_cast<long long>(oracle::cycles(r.g).size());
        auto v = is_variety(r.g, packing_mode::edge_disjoint);
        if (v.variety != (cnt == r.orc_plain.alpha) || v.cycle_count != cnt) {
            res.pass = false;
            res.detail = "plain variety flag wrong on graph #" + std::to_string(n);
            return res;
        }
        auto vs = is_variety(r.g, packing_mode::vertex_disjoint);
        if (vs.variety != (cnt == r.orc_strong.alpha)) {
            res.pass = false;
            res.detail = "strong variety flag wrong on graph #" + std::to_string(n);
            return res;
        }
        if (vs.variety) {
            ++strong_varieties;
            incidence_model plain = r.model_plain, strong = r.model_strong;
            plain.mode = strong.mode;
            if (!(plain == strong)) {
                res.pass = false;
                res.detail = "strong variety with distinct models, graph #" + std::to_string(n);
                return res;
            }
        }
    }
    res.detail = std::to_string(n) + " graphs; " + std::to_string(strong_varieties) +
                 " strong varieties with equal models";
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: curated planar instances where min feedback = max packing.

directed_graph cycle_graph(int n, int base_vertex = 0, int base_edge = 0) {
    std::vector<directed_edge> es;
    for (int i = 0; i < n; ++i)
        es.push_back({base_edge + i, base_vertex + i, base_vertex + (i + 1) % n});
    return directed_graph(es);
}

directed_graph disjoint_union(const directed_graph& a, const directed_graph& b) {
    int voff = 0, eoff = 0;
    for (vertex_id v : a.vertices()) voff = std::max(voff, v + 1);
    for (const auto& e : a.edges()) eoff = std::max(eoff, e.id + 1);
    std::vector<directed_edge> es(a.edges().begin(), a.edges().end());
    for (const auto& e : b.edges()) es.push_back({e.id + eoff, e.tail + voff, e.head + voff});
    return directed_graph(es);
}

// Grid of unit cells; each cell's boundary is a directed 4-cycle, rotation
// alternating like a checkerboard so shared sides get a consistent direction.
directed_graph checkerboard(int rows, int cols) {
    auto vid = [&](int i, int j) { return i * (cols + 1) + j; };
    std::map<std::pair<int, int>, int> seen;  // (tail, head) -> edge id
    std::vector<directed_edge> es;
    auto add = [&](int t, int h) {
        if (seen.count({t, h})) return;
        if (seen.count({h, t})) throw std::logic_error("conflicting cell orientations");
        int id = static_cast<int>(es.size());
        seen[{t, h}] = id;
        es.push_back({id, t, h});
    };
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) {
            int p00 = vid(a, b), p01 = vid(a, b + 1), p11 = vid(a + 1, b + 1),
                p10 = vid(a + 1, b);
            if ((a + b) % 2 == 0) {
                add(p00, p01);
                add(p01, p11);
                add(p11, p10);
                add(p10, p00);
            } else {
                add(p00, p10);
                add(p10, p11);
                add(p11, p01);
                add(p01, p00);
            }
        }
    return directed_graph(es);
}

outcome criterion_planar() {
    outcome res;
    // Each entry: name, graph, expected packing number (-1: only check equality).
    std::vector<std::tuple<std::string, directed_graph, int>> suite;
    suite.emplace_back("loop", directed_graph{{{0, 0, 0}}}, 1);
    for (int n = 2; n <= 5; ++n)
        suite.emplace_back("C" + std::to_string(n), cycle_graph(n), 1);
    suite.emplace_back("theta", directed_graph{{{0, 0, 1}, {1, 0, 1}, {2, 1, 0}}}, 1);
    suite.emplace_back("long theta",
                       directed_graph{{{0, 0, 2}, {1, 2, 1}, {2, 0, 3}, {3, 3, 1}, {4, 1, 0}}},
                       1);
    suite.emplace_back(
        "triple theta",
        directed_graph{{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 1, 0}}}, 1);
    suite.emplace_back("two disjoint C3", disjoint_union(cycle_graph(3), cycle_graph(3)), 2);
    suite.emplace_back("nested rings C4+C3", disjoint_union(cycle_graph(4), cycle_graph(3)),
                       2);
    suite.emplace_back(
        "three disjoint C2",
        disjoint_union(disjoint_union(cycle_graph(2), cycle_graph(2)), cycle_graph(2)), 3);
    suite.emplace_back("doubled C3",
                       directed_graph{{{0, 0, 1}, {1, 0, 1}, {2, 1, 2}, {3, 1, 2}, {4, 2, 0},
                                       {5, 2, 0}}},
                       2);
    suite.emplace_back("bowtie", directed_graph{{{0, 0, 1}, {1, 1, 0}, {2, 0, 2}, {3, 2, 0}}},
                       2);
    suite.emplace_back("chain of three C2",
                       directed_graph{{{0, 0, 1}, {1, 1, 0}, {2, 1, 2}, {3, 2, 1}, {4, 2, 3},
                                       {5, 3, 2}}},
                       3);
    suite.emplace_back("star of three C2",
                       directed_graph{{{0, 0, 1}, {1, 1, 0}, {2, 0, 2}, {3, 2, 0}, {4, 0, 3},
                                       {5, 3, 0}}},
                       3);
    // Wheels: directed rim plus one inbound and one outbound spoke.
    suite.emplace_back("wheel 4",
                       directed_graph{{{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}, {4, 4, 0},
                                       {5, 2, 4}}},
                       1);
    suite.emplace_back("wheel 5",
                       directed_graph{{{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}, {4, 4, 0},
                                       {5, 5, 0}, {6, 2, 5}}},
                       1);
    suite.emplace_back("two C4 sharing an edge",
                       directed_graph{{{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}, {4, 1, 4},
                                       {5, 4, 5}, {6, 5, 0}}},
                       1);
    suite.emplace_back("C4 with chord",
                       directed_graph{{{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}, {4, 2, 0}}},
                       1);
    suite.emplace_back("grid 1x1", checkerboard(1, 1), 1);
    suite.emplace_back("grid 1x2", checkerboard(1, 2), -1);
    suite.emplace_back("grid 2x2", checkerboard(2, 2), -1);
    suite.emplace_back("grid 2x3", checkerboard(2, 3), -1);
    suite.emplace_back("grid 3x3", checkerboard(3, 3), -1);

    for (const auto& [name, g, expected] : suite) {
        int a = packing_number(g, packing_mode::edge_disjoint);
        int b = feedback_number(g);
        if (a != b) {
            res.pass = false;
            res.detail = name + ": packing " + std::to_string(a) + " != feedback " +
                         std::to_string(b);
            return res;
        }
        if (expected >= 0 && a != expected) {
            res.pass = false;
            res.detail = name + ": packing " + std::to_string(a) + " != expected " +
                         std::to_string(expected);
            return res;
        }
    }
    res.detail = std::to_string(suite.size()) + " planar instances, packing == feedback";
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: per-edge radical membership and per-vertex elimination
// dimension against the oracle cycle scan, with the local sandwich bounds.

outcome criterion_detection() {
    outcome res;
    std::mt19937 rng(660066);
    std::uniform_int_distribution<int> num_edges(1, 6);
    int graphs = 0, edge_checks = 0, vertex_checks = 0, attempts = 0;
    while (graphs < 100 && attempts < 500) {
        ++attempts;
        auto g = corpus::random_directed(rng, 4, num_edges(rng));
        auto cycles = oracle::cycles(g);
        auto gens = ideal_gens(g);
        auto vars = edge_vars(g);
        ++graphs;
        for (const auto& e : g.edges()) {
            bool on_cycle = false;
            for (const auto& c : cycles)
                for (edge_id x : c.edges)
                    if (x == e.id) on_cycle = true;
            bool in_radical = radical_membership(e.id, gens, vars);
            ++edge_checks;
            if (in_radical != !on_cycle) {
                res.pass = false;
                res.detail = "radical membership wrong at edge " + std::to_string(e.id) +
                             " of graph #" + std::to_string(graphs);
                return res;
            }
        }
        for (vertex_id v : g.vertices()) {
            bool on_cycle = false;
            for (const auto& c : cycles)
                for (edge_id x : c.edges)
                    if (g.edge(x).tail == v || g.edge(x).head == v) on_cycle = true;
            auto local = g.incident_edges(v);
            std::vector<int> keep(local.begin(), local.end());
            auto dim = dimension_of(eliminate(gens, vars, keep));
            auto scope = cycle_scope::through_vertex(v);
            int av = local_packing(g, scope);
            int bv = feedback_number(g, scope);
            ++vertex_checks;
            if ((dim.dimension == 0) != !on_cycle || av > dim.dimension ||
                dim.dimension > bv) {
                res.pass = false;
                res.detail = "vertex detection wrong at vertex " + std::to_string(v) +
                             " of graph #" + std::to_string(graphs);
                return res;
            }
        }
    }
    res.detail = std::to_string(graphs) + " graphs, " + std::to_string(edge_checks) +
                 " edge checks, " + std::to_string(vertex_checks) + " vertex checks";
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: path-number sandwich through the contraction, and the flow
// value below the unit-graph path numbers.

outcome criterion_paths_flow() {
    outcome res;
    std::mt19937 rng(770077);
    std::uniform_int_distribution<int> num_edges(2, 6);
    int path_checks = 0, attempts = 0;
    while (path_checks < 50 && attempts < 400) {
        ++attempts;
        auto g = corpus::random_directed(rng, 4, num_edges(rng));
        auto vs = g.vertices();
        if (vs.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        vertex_id u = vs[pick(rng)], v = vs[pick(rng)];
        if (u == v) continue;
        auto pn = path_numbers(g, u, v);
        int dim = 0;
        if (pn.has_paths) {
            const auto& cg = pn.contraction.graph;
            auto local = cg.incident_edges(pn.contraction.merged_vertex);
            std::vector<int> keep(local.begin(), local.end());
            dim = dimension_of(eliminate(ideal_gens(cg), edge_vars(cg), keep)).dimension;
        }
        ++path_checks;
        if (pn.alpha > dim || dim > pn.beta) {
            res.pass = false;
            res.detail = "path sandwich failed on instance #" + std::to_string(path_checks);
            return res;
        }
    }

    std::uniform_int_distribution<int> nv(3, 5), extra(1, 4), cap(0, 3);
    int flow_checks = 0;
    for (int t = 0; t < 50; ++t) {
        int n = nv(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<directed_edge> es;
        std::map<edge_id, mpq_class> caps;
        auto arc = [&](int a, int b) {
            int id = static_cast<int>(es.size());
            es.push_back({id, a, b});
            caps[id] = cap(rng);
        };
        arc(0, pick(rng));          // source touched
        arc(pick(rng), n - 1);      // sink touched
        int m = extra(rng);
        for (int i = 0; i < m; ++i) arc(pick(rng), pick(rng));
        flow_network net;
        net.graph = directed_graph(es);
        net.capacity = caps;
        net.source = 0;
        net.sink = n - 1;
        mpq_class value = max_flow(net);
        auto unit = flow_to_graph(net);
        int alpha = 0, beta = 0;
        if (unit.graph.has_vertex(net.source) && unit.graph.has_vertex(net.sink)) {
            auto pn = path_numbers(unit.graph, net.source, net.sink);
            alpha = pn.alpha;
            beta = pn.beta;
        }
        ++flow_checks;
        if (value > alpha || alpha > beta) {
            res.pass = false;
            res.detail = "flow chain failed on network #" + std::to_string(flow_checks);
            return res;
        }
    }
    res.detail = std::to_string(path_checks) + " path instances, " +
                 std::to_string(flow_checks) + " flow networks";
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: undirected detectors against the oracle on every instance.

outcome criterion_undirected() {
    outcome res;
    std::vector<undirected_graph> graphs = corpus::all_undirected(3, 4);
    std::mt19937 rng(880088);
    std::uniform_int_distribution<int> num_edges(4, 6);
    for (int t = 0; t < 60; ++t) graphs.push_back(corpus::random_undirected(rng, 5, num_edges(rng)));

    std::size_t n = 0;
    for (const auto& g : graphs) {
        ++n;
        auto orc = oracle::undirected_cycles(g);
        std::set<edge_id> on_cycle;
        for (const auto& c : orc) on_cycle.insert(c.begin(), c.end());

        auto z = z2_detectors(g);
        for (const auto& [e, in_s] : z.edge_in_s)
            if (in_s != !on_cycle.count(e)) {
                res.pass = false;
                res.detail = "mod-2 edge flag wrong on instance #" + std::to_string(n);
                return res;
            }

        int alpha = undirected_packing(g), beta = undirected_feedback(g);
        auto h = h0_degree_one(g.oriented());
        if (alpha > static_cast<int>(h.free_rank) || static_cast<int>(h.free_rank) > beta) {
            res.pass = false;
            res.detail = "global rank sandwich failed on instance #" + std::to_string(n);
            return res;
        }
        for (vertex_id v : g.vertices()) {
            auto a1 = a1_of_vertex(g.oriented(), v);
            int av = undirected_packing(g, v), bv = undirected_feedback(g, v);
            if (av > static_cast<int>(a1.free_rank) || static_cast<int>(a1.free_rank) > bv) {
                res.pass = false;
                res.detail = "local rank sandwich failed on instance #" + std::to_string(n);
                return res;
            }
        }
        auto u = u_degree_one(g);
        bool u_nonzero = u.free_rank > 0 || !u.torsion.empty();
        if (u_nonzero != !orc.empty()) {
            res.pass = false;
            res.detail = "torsion detector wrong on instance #" + std::to_string(n);
            return res;
        }
        if (h.gf2_dimension != g.edges().size() - z.s_dimension) {
            res.pass = false;
            res.detail = "mod-2 rank identity failed on instance #" + std::to_string(n);
            return res;
        }
    }
    res.detail = std::to_string(n) + " instances (exhaustive <=4 edges + 60 random)";
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 9: removal/merge/fuse/strip identities on every small graph.

outcome criterion_surgery() {
    outcome res;
    std::vector<directed_graph> graphs = corpus::all_directed(3, 5);
    std::mt19937 rng(990099);
    for (int t = 0; t < 40; ++t) graphs.push_back(corpus::random_directed(rng, 5, 5));

    std::size_t n = 0, looped = 0;
    for (const auto& g : graphs) {
        ++n;
        auto rep = verify_removal_identities(g);
        if (!rep.all_ok()) {
            res.pass = false;
            res.detail = "identity failed on graph #" + std::to_string(n) + ": " +
                         rep.failures.front();
            return res;
        }
        if (!rep.strip_loops_checked) {
            res.pass = false;
            res.detail = "loop-stripping not exercised on graph #" + std::to_string(n);
            return res;
        }
        for (const auto& e : g.edges())
            if (e.is_loop()) {
                ++looped;
                break;
            }
    }
    res.detail = std::to_string(n) + " graphs, " + std::to_string(looped) +
                 " with loops stripped and rechecked";
    return res;
}

// ---------------------------------------------------------------------------
// Criterion 10: byte-identical reports; reduced bases invariant under
// generator permutation.

outcome criterion_determinism() {
    outcome res;
    std::vector<directed_graph> probes = {
        directed_graph{{{0, 0, 1}, {1, 0, 1}, {2, 1, 0}}},
        directed_graph{{{0, 0, 1}, {1, 1, 0}, {2, 2, 3}, {3, 3, 2}}},
        checkerboard(2, 2),
    };
    std::mt19937 rng(101010);
    std::uniform_int_distribution<int> num_edges(3, 5);
    for (int t = 0; t < 5; ++t) probes.push_back(corpus::random_directed(rng, 4, num_edges(rng)));

    for (std::size_t i = 0; i < probes.size(); ++i) {
        auto a = cmd_analyze(probes[i], {}, {});
        auto b = cmd_analyze(probes[i], {}, {});
        if (a.report.dump(2) != b.report.dump(2)) {
            res.pass = false;
            res.detail = "report bytes differ on probe #" + std::to_string(i + 1);
            return res;
        }
    }

    int bases = 0;
    for (int t = 0; t < 30; ++t) {
        auto g = corpus::random_directed(rng, 4, num_edges(rng));
        auto gens = ideal_gens(g);
        auto vars = edge_vars(g);
        auto reference = buchberger(gens, vars);
        for (int s = 0; s < 3; ++s) {
            auto shuffled = gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            auto again = buchberger(shuffled, vars);
            ++bases;
            if (again.gens != reference.gens) {
                res.pass = false;
                res.detail = "reduced basis changed under generator permutation";
                return res;
            }
        }
    }
    res.detail = std::to_string(probes.size()) + " report probes, " + std::to_string(bases) +
                 " permuted basis runs";
    return res;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<outcome()>>> criteria = {
        {"dimension: model = alpha-1, Krull = alpha", criterion_dimension},
        {"degree and counts match the spectrum", criterion_degree_spectrum},
        {"strong route: direct = doubled-graph = oracle", criterion_strong_route},
        {"variety flag = (cycle count == alpha)", criterion_variety},
        {"planar suite: packing == feedback", criterion_planar},
        {"edge/vertex detection equivalences", criterion_detection},
        {"path/flow sandwich chain", criterion_paths_flow},
        {"undirected detectors and rank bounds", criterion_undirected},
        {"removal/merge/fuse/strip identities", criterion_surgery},
        {"determinism of reports and bases", criterion_determinism},
    };

    bool all = true;
    int idx = 0;
    for (auto& [name, fn] : criteria) {
        ++idx;
        auto start = std::chrono::steady_clock::now();
        outcome r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count() /
                    1000.0;
        std::printf("[%2d] %-46s %s  (%.1fs%s%s)\n", idx, name.c_str(),
                    r.pass ? "PASS" : "FAIL", secs, r.detail.empty() ? "" : "; ",
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "all criteria passed" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
