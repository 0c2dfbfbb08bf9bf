#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclepack/cycles.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/guards.hpp"
#include "cyclepack/relations.hpp"

namespace cyclepack {

// One irreducible piece of the incidence set: the projective linear subspace
// cut out by "x_e = 0 outside the collection" and "all coordinates equal
// along each collection cycle".
struct linear_component {
    std::vector<edge_id> zeros;                 // ascending
    std::vector<std::vector<edge_id>> classes;  // each ascending; list sorted

    // Projective dimension: one free parameter per class, minus one.
    int dimension() const { return static_cast<int>(classes.size()) - 1; }

    bool operator==(const linear_component& o) const {
        return zeros == o.zeros && classes == o.classes;
    }
    bool operator<(const linear_component& o) const {
        if (zeros != o.zeros) return zeros < o.zeros;
        return classes < o.classes;
    }

    bool contains(const std::map<edge_id, mpq_class>& point) const {
        for (edge_id e : zeros)
            if (point.at(e) != 0) return false;
        for (const auto& cls : classes)
            for (std::size_t i = 1; i < cls.size(); ++i)
                if (point.at(cls[i]) != point.at(cls[0])) return false;
        return true;
    }
};

// P(a) ⊆ P(b): every defining condition of b must hold identically on a,
// i.e. b's zero set lies inside a's, and each b-class sits inside a single
// a-class or vanishes entirely.
inline bool subspace_leq(const linear_component& a, const linear_component& b) {
    std::set<edge_id> za(a.zeros.begin(), a.zeros.end());
    for (edge_id e : b.zeros)
        if (!za.count(e)) return false;
    for (const auto& cls : b.classes) {
        bool all_zero = true;
        for (edge_id e : cls)
            if (!za.count(e)) all_zero = false;
        if (all_zero) continue;
        bool inside_one = false;
        for (const auto& host : a.classes) {
            std::set<edge_id> h(host.begin(), host.end());
            bool inside = true;
            for (edge_id e : cls)
                if (!h.count(e)) inside = false;
            if (inside) inside_one = true;
        }
        if (!inside_one) return false;
    }
    return true;
}

// The full model of the incidence set: a finite union of linear components,
// one per maximal collection, pairwise incomparable.
struct incidence_model {
    std::size_t edge_count = 0;     // ambient projective dimension + 1
    packing_mode mode = packing_mode::edge_disjoint;
    std::vector<linear_component> components;  // sorted, irredundant

    bool operator==(const incidence_model& o) const {
        return edge_count == o.edge_count && mode == o.mode && components == o.components;
    }
};

namespace detail {

inline linear_component component_of_collection(const directed_graph& g,
                                                const std::vector<cycle>& cycles,
                                                const std::vector<int>& collection) {
    linear_component c;
    std::set<edge_id> used;
    for (int idx : collection) {
        std::vector<edge_id> cls = cycles[static_cast<std::size_t>(idx)].edges;
        std::sort(cls.begin(), cls.end());
        used.insert(cls.begin(), cls.end());
        c.classes.push_back(std::move(cls));
    }
    std::sort(c.classes.begin(), c.classes.end());
    for (const auto& e : g.edges())
        if (!used.count(e.id)) c.zeros.push_back(e.id);
    return c;
}

inline void check_incomparable(const std::vector<linear_component>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (i != j && subspace_leq(cs[i], cs[j]))
                throw internal_error("incidence components are comparable");
}

}  // namespace detail

// Direct construction: one component per maximal collection of the spectrum
// in the requested mode.  Empty graph of cycles gives the empty model (the
// empty collection's component has no classes and is dropped).
inline incidence_model build_incidence_set_direct(const directed_graph& g, packing_mode mode,
                                                  const limits& lim = {}) {
    incidence_model m;
    m.edge_count = g.edges().size();
    m.mode = mode;
    auto spec = cycle_spectrum(g, mode, lim);
    for (const auto& collection : spec.collections) {
        if (collection.empty()) continue;
        m.components.push_back(detail::component_of_collection(g, spec.cycles, collection));
    }
    std::sort(m.components.begin(), m.components.end());
    m.components.erase(std::unique(m.components.begin(), m.components.end()),
                       m.components.end());
    detail::check_incomparable(m.components);
    return m;
}

// Drop all coordinates outside `kept` from a model over a larger edge set.
inline incidence_model project_model(const incidence_model& big,
                                     const std::vector<edge_id>& kept) {
    std::set<edge_id> keep(kept.begin(), kept.end());
    incidence_model m;
    m.edge_count = keep.size();
    m.mode = big.mode;
    for (const auto& c : big.components) {
        linear_component p;
        for (edge_id e : c.zeros)
            if (keep.count(e)) p.zeros.push_back(e);
        for (const auto& cls : c.classes) {
            std::vector<edge_id> kept_cls;
            for (edge_id e : cls)
                if (keep.count(e)) kept_cls.push_back(e);
            if (!kept_cls.empty()) p.classes.push_back(std::move(kept_cls));
        }
        std::sort(p.classes.begin(), p.classes.end());
        if (!p.classes.empty()) m.components.push_back(std::move(p));
    }
    std::sort(m.components.begin(), m.components.end());
    m.components.erase(std::unique(m.components.begin(), m.components.end()),
                       m.components.end());
    return m;
}

// Build the model; in vertex-disjoint mode the result is computed twice —
// directly, and by projecting the edge-disjoint model of the doubled graph
// back down — and the two must agree.
inline incidence_model build_incidence_set(const directed_graph& g, packing_mode mode,
                                           const limits& lim = {}) {
    incidence_model direct = build_incidence_set_direct(g, mode, lim);
    if (mode == packing_mode::vertex_disjoint) {
        auto dbl = bipartite_double(g);
        incidence_model on_double =
            build_incidence_set_direct(dbl.graph, packing_mode::edge_disjoint, lim);
        std::vector<edge_id> original;
        for (const auto& e : g.edges()) original.push_back(e.id);
        incidence_model projected = project_model(on_double, original);
        projected.mode = packing_mode::vertex_disjoint;
        if (!(projected == direct))
            throw internal_error("projected doubled model disagrees with the direct one");
    }
    return direct;
}

inline int dimension(const incidence_model& m) {
    int best = -1;
    for (const auto& c : m.components) best = std::max(best, c.dimension());
    return best;
}

struct degree_report {
    long long degree = 0;                 // number of top-dimensional components
    std::map<int, long long> counts;      // dimension -> component count
};

inline degree_report degree_and_counts(const incidence_model& m) {
    if (m.components.empty())
        throw std::invalid_argument("the empty model has no degree");
    degree_report r;
    int top = dimension(m);
    for (const auto& c : m.components) {
        ++r.counts[c.dimension()];
        if (c.dimension() == top) ++r.degree;
    }
    return r;
}

struct variety_check {
    bool variety = false;
    long long cycle_count = 0;
    int packing = 0;
};

// The incidence set is a single irreducible piece exactly when the distinct
// cycles number the packing value.  When the vertex-disjoint set is a
// variety the two models must coincide, which is asserted.
inline variety_check is_variety(const directed_graph& g, packing_mode mode,
                                const limits& lim = {}) {
    variety_check v;
    v.cycle_count = static_cast<long long>(enumerate_cycles(g, lim).size());
    v.packing = packing_number(g, mode, cycle_scope{}, lim);
    v.variety = v.cycle_count == v.packing;
    if (mode == packing_mode::vertex_disjoint && v.variety) {
        auto plain = build_incidence_set(g, packing_mode::edge_disjoint, lim);
        auto strong = build_incidence_set(g, packing_mode::vertex_disjoint, lim);
        plain.mode = strong.mode;  // compare the geometry, not the tag
        if (!(plain == strong))
            throw internal_error("a strong variety whose plain and strong sets differ");
    }
    return v;
}

// Point membership, by the component model and — as a mandatory agreement
// check — by evaluating every defining relation of the matching ideal.
inline bool membership(const directed_graph& g, const incidence_model& m,
                       const std::map<edge_id, mpq_class>& point) {
    if (point.size() != g.edges().size())
        throw std::invalid_argument("point dimension does not match the edge count");
    bool some_nonzero = false;
    for (const auto& e : g.edges()) {
        if (!point.count(e.id))
            throw std::invalid_argument("point misses edge " + std::to_string(e.id));
        if (point.at(e.id) != 0) some_nonzero = true;
    }
    if (!some_nonzero) throw std::invalid_argument("the zero tuple is not a projective point");

    bool in_model = false;
    for (const auto& c : m.components)
        if (c.contains(point)) in_model = true;

    std::map<int, mpq_class> assignment;
    for (const auto& [e, val] : point) assignment[e] = val;
    const generator_family fam = m.mode == packing_mode::edge_disjoint
                                     ? incidence_relations(g)
                                     : strong_relations(g);
    bool vanishes = true;
    for (const auto& r : fam.relations)
        if (!r.poly.is_zero() && r.poly.evaluate(assignment) != 0) vanishes = false;

    if (in_model != vanishes)
        throw internal_error("component membership disagrees with relation evaluation");
    return in_model;
}

}  // namespace cyclepack
