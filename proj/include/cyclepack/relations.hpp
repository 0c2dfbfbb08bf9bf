#pragma once

#include <string>
#include <vector>

#include "cyclepack/graph.hpp"
#include "cyclepack/polynomial.hpp"

namespace cyclepack {

// One generator of an incidence relation family, with its provenance.
struct relation {
    polynomial poly;
    vertex_id at_vertex;
    int degree;              // the symmetric degree l it came from
    std::string kind;        // "delta", "strong_e1", "strong_out", "strong_in", "omega"
};

// Generators keep their provenance even when the polynomial is identically
// zero; ideal-level consumers skip zero entries.
struct generator_family {
    std::vector<relation> relations;

    std::vector<polynomial> nonzero() const {
        std::vector<polynomial> out;
        for (const auto& r : relations)
            if (!r.poly.is_zero()) out.push_back(r.poly);
        return out;
    }
};

namespace detail {

inline std::vector<int> strip(const std::vector<int>& vars, const std::vector<int>& loops) {
    std::vector<int> out;
    for (int v : vars)
        if (!std::binary_search(loops.begin(), loops.end(), v)) out.push_back(v);
    return out;
}

}  // namespace detail

// Incidence relations: per vertex v with out-edge variables X and in-edge
// variables Y (a loop occurs in both), the generators are
//     delta_{v,l} = e_l(X) - e_l(Y)   for 1 <= l <= max(|X|, |Y|).
// With strip_loops, loop variables are removed from both X and Y first and
// the degree range shrinks accordingly (de-looping keeps the ideal).
inline generator_family incidence_relations(const directed_graph& g, bool strip_loops = false) {
    generator_family fam;
    for (vertex_id v : g.vertices()) {
        std::vector<int> x = g.out_edges(v), y = g.in_edges(v);
        if (strip_loops) {
            auto loops = g.loops_at(v);
            x = detail::strip(x, loops);
            y = detail::strip(y, loops);
        }
        int k = static_cast<int>(std::max(x.size(), y.size()));
        for (int l = 1; l <= k; ++l)
            fam.relations.push_back(
                {elementary_symmetric(l, x) - elementary_symmetric(l, y), v, l, "delta"});
    }
    return fam;
}

// Strong incidence relations: per vertex the degree-1 difference plus every
// higher pure product on each side,
//     e_1(X) - e_1(Y),  e_l(X) for 2 <= l <= |X|,  e_l(Y) for 2 <= l <= |Y|.
inline generator_family strong_relations(const directed_graph& g) {
    generator_family fam;
    for (vertex_id v : g.vertices()) {
        std::vector<int> x = g.out_edges(v), y = g.in_edges(v);
        if (x.empty() && y.empty()) continue;
        fam.relations.push_back(
            {elementary_symmetric(1, x) - elementary_symmetric(1, y), v, 1, "strong_e1"});
        for (int l = 2; l <= static_cast<int>(x.size()); ++l)
            fam.relations.push_back({elementary_symmetric(l, x), v, l, "strong_out"});
        for (int l = 2; l <= static_cast<int>(y.size()); ++l)
            fam.relations.push_back({elementary_symmetric(l, y), v, l, "strong_in"});
    }
    return fam;
}

// Undirected incidence relations: per vertex v the generators e_l(E(v)) for
// 1 <= l <= deg(v), where the incidence list E(v) repeats each loop at v
// twice (so deg counts loops twice as well).
inline generator_family undirected_relations(const undirected_graph& g) {
    generator_family fam;
    for (vertex_id v : g.vertices()) {
        std::vector<int> vars;
        for (edge_id e : g.incident_edges(v)) {
            vars.push_back(e);
            if (g.edge(e).is_loop()) vars.push_back(e);
        }
        for (int l = 1; l <= static_cast<int>(vars.size()); ++l)
            fam.relations.push_back({elementary_symmetric(l, vars), v, l, "omega"});
    }
    return fam;
}

}  // namespace cyclepack
