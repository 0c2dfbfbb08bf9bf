#pragma once

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclepack/cycles.hpp"
#include "cyclepack/flow.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/graph_io.hpp"
#include "cyclepack/groebner.hpp"
#include "cyclepack/guards.hpp"
#include "cyclepack/hilbert.hpp"
#include "cyclepack/homology.hpp"
#include "cyclepack/incidence_set.hpp"
#include "cyclepack/relations.hpp"

namespace cyclepack {

inline constexpr int report_schema = 1;

struct report_options {
    std::string mode = "both";  // plain | strong | both
    bool algebraic = true;
    bool timings = false;
    limits lim;
};

struct command_result {
    nlohmann::json report;
    bool agree = true;          // every checked identity held
    bool guard_tripped = false; // some section hit a resource cap
};

namespace detail {

// Run one report section, converting a tripped guard into a recorded status
// instead of a failed command.  Returns null JSON when the guard fired.
template <typename F>
nlohmann::json run_section(const std::string& name, command_result& res, nlohmann::json& guards,
                           const report_options& opts, nlohmann::json& timings, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    nlohmann::json out;
    try {
        out = body();
        guards[name] = nullptr;
    } catch (const guard_error& e) {
        res.guard_tripped = true;
        guards[name] = {{"guard", e.guard_name}, {"message", e.what()}};
        out = nullptr;
    }
    if (opts.timings) {
        auto dt = std::chrono::steady_clock::now() - t0;
        timings[name] =
            std::chrono::duration_cast<std::chrono::microseconds>(dt).count() / 1000.0;
    }
    return out;
}

inline nlohmann::json spectrum_json(const std::map<int, long long>& gamma) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [n, cnt] : gamma) j[std::to_string(n)] = cnt;
    return j;
}

inline nlohmann::json component_json(const linear_component& c) {
    return {{"zeros", c.zeros}, {"classes", c.classes}};
}

inline nlohmann::json model_json(const incidence_model& m) {
    nlohmann::json j;
    j["mode"] = m.mode == packing_mode::edge_disjoint ? "plain" : "strong";
    j["dimension"] = dimension(m);
    if (m.components.empty()) {
        j["degree"] = nullptr;
        j["counts"] = nlohmann::json::object();
    } else {
        auto deg = degree_and_counts(m);
        j["degree"] = deg.degree;
        j["counts"] = nlohmann::json::object();
        for (const auto& [d, cnt] : deg.counts) j["counts"][std::to_string(d)] = cnt;
    }
    j["components"] = nlohmann::json::array();
    for (const auto& c : m.components) j["components"].push_back(component_json(c));
    return j;
}

inline void record_flag(command_result& res, nlohmann::json& block, const std::string& name,
                        bool value) {
    block[name] = value;
    if (!value) res.agree = false;
}

inline std::vector<int> edge_vars(const directed_graph& g) {
    std::vector<int> vars;
    for (const auto& e : g.edges()) vars.push_back(e.id);
    return vars;
}

inline nlohmann::json graded_json(const graded_piece_report& r) {
    nlohmann::json j;
    j["free_rank"] = r.free_rank;
    j["torsion"] = nlohmann::json::array();
    for (const auto& t : r.torsion) j["torsion"].push_back(t.get_str());
    j["witness_edges"] = r.witness_edges;
    j["gf2_dimension"] = r.gf2_dimension;
    return j;
}

}  // namespace detail

// Full analysis: packing numbers, spectra, the incidence-set model, and the
// algebraic cross-checks, each section guarded independently.
inline command_result cmd_analyze(const directed_graph& g,
                                  const std::vector<std::string>& warnings,
                                  const report_options& opts) {
    command_result res;
    nlohmann::json& j = res.report;
    nlohmann::json guards = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    j["schema"] = report_schema;
    j["command"] = "analyze";
    j["graph"] = to_json(g);
    j["warnings"] = warnings;
    j["flags"] = {{"mode", opts.mode}, {"algebraic", opts.algebraic}};

    bool want_strong = opts.mode != "plain";

    // Plain combinatorics: alpha, beta, spectrum.
    int alpha = -1, beta = -1;
    std::map<int, long long> gamma;
    j["combinatorial"] = detail::run_section("combinatorial", res, guards, opts, timings, [&] {
        auto spec = cycle_spectrum(g, packing_mode::edge_disjoint, opts.lim);
        alpha = spec.alpha();
        beta = feedback_number(g, cycle_scope::all(), opts.lim);
        gamma = spec.gamma;
        nlohmann::json s;
        s["alpha"] = alpha;
        s["beta"] = beta;
        s["cycle_count"] = spec.cycles.size();
        s["spectrum"] = detail::spectrum_json(spec.gamma);
        return s;
    });

    // Plain incidence-set model.
    j["incidence_set"] = detail::run_section("incidence_set", res, guards, opts, timings, [&] {
        auto m = build_incidence_set(g, packing_mode::edge_disjoint, opts.lim);
        nlohmann::json s = detail::model_json(m);
        auto v = is_variety(g, packing_mode::edge_disjoint, opts.lim);
        s["variety"] = v.variety;
        if (alpha >= 0) {
            detail::record_flag(res, s, "agree_dimension_alpha", dimension(m) == alpha - 1);
            if (!m.components.empty())
                detail::record_flag(res, s, "agree_degree_spectrum",
                                    degree_and_counts(m).degree == gamma.at(alpha));
        }
        return s;
    });

    // Strong route: vertex-disjoint quantities plus the doubled-graph check.
    if (want_strong) {
        j["strong"] = detail::run_section("strong", res, guards, opts, timings, [&] {
            auto spec = cycle_spectrum(g, packing_mode::vertex_disjoint, opts.lim);
            auto dbl = strong_via_double(g, opts.lim);
            nlohmann::json s;
            s["alpha_strong"] = spec.alpha();
            s["spectrum_strong"] = detail::spectrum_json(spec.gamma);
            s["alpha_via_double"] = dbl.alpha_strong;
            detail::record_flag(res, s, "agree_double_alpha", spec.alpha() == dbl.alpha_strong);
            detail::record_flag(res, s, "agree_double_spectrum", spec.gamma == dbl.gamma_strong);
            auto m = build_incidence_set(g, packing_mode::vertex_disjoint, opts.lim);
            s["incidence_set"] = detail::model_json(m);
            detail::record_flag(res, s, "agree_dimension_alpha",
                                dimension(m) == spec.alpha() - 1);
            auto v = is_variety(g, packing_mode::vertex_disjoint, opts.lim);
            s["variety"] = v.variety;
            return s;
        });
    } else {
        j["strong"] = nullptr;
    }

    // Algebraic route: Krull dimension and Hilbert degree of the quotient.
    if (opts.algebraic) {
        j["algebraic"] = detail::run_section("algebraic", res, guards, opts, timings, [&] {
            auto fam = incidence_relations(g);
            auto basis = buchberger(fam.nonzero(), detail::edge_vars(g), opts.lim);
            auto dim = dimension_of(basis);
            nlohmann::json s;
            s["krull_dimension"] = dim.dimension;
            s["hilbert_degree"] = dim.hilbert_degree.get_str();
            s["basis_size"] = basis.gens.size();
            if (alpha >= 0) {
                detail::record_flag(res, s, "agree_krull_alpha", dim.dimension == alpha);
                long gamma_top = static_cast<long>(gamma.at(alpha));
                detail::record_flag(res, s, "hilbert_degree_bounds_spectrum",
                                    dim.hilbert_degree >= gamma_top);
                // Equality holds often but is not an identity; reported only.
                s["hilbert_degree_equals_spectrum"] = dim.hilbert_degree == gamma_top;
            }
            return s;
        });
    } else {
        j["algebraic"] = nullptr;
    }

    j["guards"] = guards;
    if (opts.timings) j["timings_ms"] = timings;
    return res;
}

// Detector for one vertex: is some directed cycle through it, by search and
// by the dimension of the eliminated ideal on its incident edges.
inline command_result cmd_detect_vertex(const directed_graph& g, vertex_id v,
                                        const report_options& opts) {
    if (!g.has_vertex(v))
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    command_result res;
    nlohmann::json& j = res.report;
    nlohmann::json guards = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    j["schema"] = report_schema;
    j["command"] = "detect";
    j["graph"] = to_json(g);
    j["target"] = {{"kind", "vertex"}, {"id", v}, {"name", g.vertex_name(v)}};

    int alpha_v = -1, beta_v = -1;
    j["combinatorial"] = detail::run_section("combinatorial", res, guards, opts, timings, [&] {
        auto scope = cycle_scope::through_vertex(v);
        alpha_v = local_packing(g, scope, opts.lim);
        beta_v = feedback_number(g, scope, opts.lim);
        return nlohmann::json{
            {"on_cycle", alpha_v > 0}, {"alpha_local", alpha_v}, {"beta_local", beta_v}};
    });

    if (opts.algebraic) {
        j["algebraic"] = detail::run_section("algebraic", res, guards, opts, timings, [&] {
            auto fam = incidence_relations(g);
            auto local = g.incident_edges(v);
            std::vector<int> keep(local.begin(), local.end());
            auto elim = eliminate(fam.nonzero(), detail::edge_vars(g), keep, opts.lim);
            auto dim = dimension_of(elim);
            nlohmann::json s;
            s["elimination_dimension"] = dim.dimension;
            if (alpha_v >= 0) {
                detail::record_flag(res, s, "agree_zero_dimension",
                                    (dim.dimension == 0) == (alpha_v == 0));
                detail::record_flag(res, s, "bounds_ok",
                                    alpha_v <= dim.dimension && dim.dimension <= beta_v);
            }
            return s;
        });
    } else {
        j["algebraic"] = nullptr;
    }

    j["guards"] = guards;
    if (opts.timings) j["timings_ms"] = timings;
    return res;
}

// Detector for one edge: is some directed cycle through it, by search and by
// radical membership of its variable.
inline command_result cmd_detect_edge(const directed_graph& g, edge_id x,
                                      const report_options& opts) {
    if (!g.has_edge(x)) throw std::invalid_argument("unknown edge " + std::to_string(x));
    command_result res;
    nlohmann::json& j = res.report;
    nlohmann::json guards = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    j["schema"] = report_schema;
    j["command"] = "detect";
    j["graph"] = to_json(g);
    j["target"] = {{"kind", "edge"}, {"id", x}};

    int alpha_x = -1, beta_x = -1;
    j["combinatorial"] = detail::run_section("combinatorial", res, guards, opts, timings, [&] {
        auto scope = cycle_scope::meeting_edges({x});
        alpha_x = local_packing(g, scope, opts.lim);
        beta_x = feedback_number(g, scope, opts.lim);
        return nlohmann::json{
            {"on_cycle", alpha_x > 0}, {"alpha_local", alpha_x}, {"beta_local", beta_x}};
    });

    if (opts.algebraic) {
        j["algebraic"] = detail::run_section("algebraic", res, guards, opts, timings, [&] {
            auto fam = incidence_relations(g);
            bool in_radical = radical_membership(static_cast<int>(x), fam.nonzero(),
                                                 detail::edge_vars(g), opts.lim);
            nlohmann::json s;
            s["radical_member"] = in_radical;
            if (alpha_x >= 0)
                detail::record_flag(res, s, "agree_radical", in_radical == (alpha_x == 0));
            return s;
        });
    } else {
        j["algebraic"] = nullptr;
    }

    j["guards"] = guards;
    if (opts.timings) j["timings_ms"] = timings;
    return res;
}

// Path numbers u -> v via the contraction, with the sandwiched elimination
// dimension on the merged vertex's edges.
inline command_result cmd_paths(const directed_graph& g, vertex_id u, vertex_id v,
                                const report_options& opts) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("unknown endpoint");
    command_result res;
    nlohmann::json& j = res.report;
    nlohmann::json guards = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    j["schema"] = report_schema;
    j["command"] = "paths";
    j["graph"] = to_json(g);
    j["from"] = u;
    j["to"] = v;

    path_numbers_result pn;
    bool have_pn = false;
    j["combinatorial"] = detail::run_section("combinatorial", res, guards, opts, timings, [&] {
        pn = path_numbers(g, u, v, opts.lim);
        have_pn = true;
        nlohmann::json s;
        s["alpha_path"] = pn.alpha;
        s["beta_path"] = pn.beta;
        s["contraction_nontrivial"] = pn.has_paths;
        return s;
    });

    if (opts.algebraic) {
        j["algebraic"] = detail::run_section("algebraic", res, guards, opts, timings, [&] {
            nlohmann::json s;
            if (!have_pn || !pn.has_paths) {
                s["elimination_dimension"] = 0;
                if (have_pn)
                    detail::record_flag(res, s, "chain_ok", pn.alpha == 0 && pn.beta == 0);
                return s;
            }
            const directed_graph& cg = pn.contraction.graph;
            auto fam = incidence_relations(cg);
            auto local = cg.incident_edges(pn.contraction.merged_vertex);
            std::vector<int> keep(local.begin(), local.end());
            auto elim = eliminate(fam.nonzero(), detail::edge_vars(cg), keep, opts.lim);
            auto dim = dimension_of(elim);
            s["elimination_dimension"] = dim.dimension;
            detail::record_flag(res, s, "chain_ok",
                                pn.alpha <= dim.dimension && dim.dimension <= pn.beta);
            return s;
        });
    } else {
        j["algebraic"] = nullptr;
    }

    j["guards"] = guards;
    if (opts.timings) j["timings_ms"] = timings;
    return res;
}

// Flow value against the path packing numbers of the unit multigraph.
inline command_result cmd_flow(const flow_network& net, const report_options& opts) {
    command_result res;
    nlohmann::json& j = res.report;
    nlohmann::json guards = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    j["schema"] = report_schema;
    j["command"] = "flow";
    j["graph"] = to_json(net.graph);
    j["source"] = net.source;
    j["sink"] = net.sink;
    nlohmann::json caps = nlohmann::json::object();
    for (const auto& [e, c] : net.capacity) caps[std::to_string(e)] = rational_string(c);
    j["capacities"] = caps;

    j["result"] = detail::run_section("flow", res, guards, opts, timings, [&] {
        mpq_class value = max_flow(net);
        auto unit = flow_to_graph(net);
        auto pn = path_numbers(unit.graph, net.source, net.sink, opts.lim);
        nlohmann::json s;
        s["max_flow"] = rational_string(value);
        s["alpha_path"] = pn.alpha;
        s["beta_path"] = pn.beta;
        s["unit_graph_edges"] = unit.graph.edges().size();
        detail::record_flag(res, s, "chain_ok", value <= pn.alpha && pn.alpha <= pn.beta);
        return s;
    });

    j["guards"] = guards;
    if (opts.timings) j["timings_ms"] = timings;
    return res;
}

// Undirected analysis: packing numbers, the two graded pieces, the local
// pieces, and the mod-2 detectors, with every bound checked.
inline command_result cmd_undirected(const undirected_graph& g,
                                     const std::vector<std::string>& warnings,
                                     const report_options& opts) {
    command_result res;
    nlohmann::json& j = res.report;
    nlohmann::json guards = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    j["schema"] = report_schema;
    j["command"] = "undirected";
    j["graph"] = to_json(g);
    j["warnings"] = warnings;

    int alpha = -1, beta = -1;
    j["combinatorial"] = detail::run_section("combinatorial", res, guards, opts, timings, [&] {
        alpha = undirected_packing(g, std::nullopt, opts.lim);
        beta = undirected_feedback(g, std::nullopt, opts.lim);
        return nlohmann::json{{"alpha", alpha}, {"beta", beta}};
    });

    j["homology"] = detail::run_section("homology", res, guards, opts, timings, [&] {
        auto h = h0_degree_one(g.oriented());
        auto u = u_degree_one(g);
        nlohmann::json s;
        s["h01"] = detail::graded_json(h);
        s["u01"] = detail::graded_json(u);
        if (alpha >= 0) {
            detail::record_flag(res, s, "h01_bounds_ok",
                                alpha <= static_cast<int>(h.free_rank) &&
                                    static_cast<int>(h.free_rank) <= beta);
            bool u_nonzero = u.free_rank > 0 || !u.torsion.empty();
            detail::record_flag(res, s, "u01_detects_cycle", u_nonzero == (alpha > 0));
        }
        nlohmann::json locals = nlohmann::json::object();
        bool local_ok = true;
        for (vertex_id v : g.vertices()) {
            auto a1 = a1_of_vertex(g.oriented(), v);
            int av = undirected_packing(g, v, opts.lim);
            int bv = undirected_feedback(g, v, opts.lim);
            nlohmann::json lv = detail::graded_json(a1);
            lv["alpha_local"] = av;
            lv["beta_local"] = bv;
            bool ok = av <= static_cast<int>(a1.free_rank) &&
                      static_cast<int>(a1.free_rank) <= bv;
            lv["bounds_ok"] = ok;
            local_ok = local_ok && ok;
            locals[std::to_string(v)] = lv;
        }
        s["a1"] = locals;
        detail::record_flag(res, s, "a1_bounds_ok", local_ok);
        return s;
    });

    j["z2"] = detail::run_section("z2", res, guards, opts, timings, [&] {
        auto z = z2_detectors(g);
        auto h = h0_degree_one(g.oriented());
        nlohmann::json s;
        s["s_dimension"] = z.s_dimension;
        s["global_bound"] = z.global_bound;
        nlohmann::json vb = nlohmann::json::object();
        for (const auto& [v, b] : z.vertex_bound) vb[std::to_string(v)] = b;
        s["vertex_bound"] = vb;
        nlohmann::json on = nlohmann::json::object();
        for (const auto& [e, in_s] : z.edge_in_s) on[std::to_string(e)] = !in_s;
        s["edge_on_cycle"] = on;
        detail::record_flag(res, s, "gf2_rank_matches_h01",
                            z.global_bound == h.gf2_dimension);
        if (alpha >= 0)
            detail::record_flag(res, s, "alpha_le_global_bound",
                                alpha <= static_cast<int>(z.global_bound));
        return s;
    });

    j["guards"] = guards;
    if (opts.timings) j["timings_ms"] = timings;
    return res;
}

}  // namespace cyclepack
