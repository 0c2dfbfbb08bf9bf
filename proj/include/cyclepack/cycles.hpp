#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cyclepack/bitvec.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/guards.hpp"

namespace cyclepack {

// A simple directed cycle stored as its edge-id traversal, rotated so that it
// starts at the minimal edge id.  Vertices along a simple cycle are pairwise
// distinct, so the edge set determines the traversal; loops have length 1.
struct cycle {
    std::vector<edge_id> edges;

    void canonicalize() {
        auto it = std::min_element(edges.begin(), edges.end());
        std::rotate(edges.begin(), it, edges.end());
    }
    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const cycle& o) const { return edges == o.edges; }
    bool operator<(const cycle& o) const { return edges < o.edges; }
};

// Does the graph contain any directed cycle?  (A loop counts.)
inline bool is_acyclic(const directed_graph& g) {
    // Kahn peeling on the multigraph.
    std::map<vertex_id, int> indeg;
    for (vertex_id v : g.vertices()) indeg[v] = 0;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) return false;
        ++indeg[e.head];
    }
    std::vector<vertex_id> q;
    for (auto& [v, d] : indeg)
        if (d == 0) q.push_back(v);
    std::size_t peeled = 0;
    while (!q.empty()) {
        vertex_id v = q.back();
        q.pop_back();
        ++peeled;
        for (edge_id e : g.out_edges(v))
            if (--indeg[g.edge(e).head] == 0) q.push_back(g.edge(e).head);
    }
    return peeled == g.vertices().size();
}

namespace detail {

// Acyclicity of the subgraph obtained by deleting the flagged edges
// (positions refer to g.edges() order).
inline bool residual_acyclic(const directed_graph& g, const bitvec& removed_positions) {
    std::map<vertex_id, int> indeg;
    for (vertex_id v : g.vertices()) indeg[v] = 0;
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (removed_positions.test(i)) continue;
        if (es[i].is_loop()) return false;
        ++indeg[es[i].head];
    }
    std::map<vertex_id, std::vector<vertex_id>> heads;  // tail -> heads of live edges
    for (std::size_t i = 0; i < es.size(); ++i)
        if (!removed_positions.test(i) && !es[i].is_loop()) heads[es[i].tail].push_back(es[i].head);
    std::vector<vertex_id> q;
    std::size_t live_vertices = indeg.size();
    for (auto& [v, d] : indeg)
        if (d == 0) q.push_back(v);
    std::size_t peeled = 0;
    while (!q.empty()) {
        vertex_id v = q.back();
        q.pop_back();
        ++peeled;
        auto it = heads.find(v);
        if (it == heads.end()) continue;
        for (vertex_id h : it->second)
            if (--indeg[h] == 0) q.push_back(h);
    }
    return peeled == live_vertices;
}

}  // namespace detail

// All simple directed cycles, sorted by canonical edge sequence.  Exhaustive
// backtracking anchored at the minimal vertex of each cycle; the cap in
// `lim.max_cycles` aborts with guard_error instead of returning a truncation.
inline std::vector<cycle> enumerate_cycles(const directed_graph& g, const limits& lim = {}) {
    std::vector<cycle> found;
    auto emit = [&](cycle c) {
        c.canonicalize();
        found.push_back(std::move(c));
        if (found.size() > lim.max_cycles) throw guard_error("max-cycles", lim.max_cycles);
    };
    for (const auto& e : g.edges())
        if (e.is_loop()) emit(cycle{{e.id}});

    // Paths from s through vertices > s close into cycles whose minimal
    // vertex is s, so each cycle is discovered exactly once.
    std::vector<edge_id> path;
    std::set<vertex_id> on_path;
    std::function<void(vertex_id, vertex_id)> extend = [&](vertex_id s, vertex_id v) {
        for (edge_id eid : g.out_edges(v)) {
            const auto& e = g.edge(eid);
            if (e.is_loop()) continue;
            if (e.head == s) {
                path.push_back(eid);
                emit(cycle{path});
                path.pop_back();
            } else if (e.head > s && !on_path.count(e.head)) {
                path.push_back(eid);
                on_path.insert(e.head);
                extend(s, e.head);
                on_path.erase(e.head);
                path.pop_back();
            }
        }
    };
    for (vertex_id s : g.vertices()) {
        on_path = {s};
        extend(s, s);
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Disjointness mode for collections of cycles.
enum class packing_mode {
    edge_disjoint,    // plain: no two cycles share an edge
    vertex_disjoint,  // strong: no two cycles share a vertex
};

// Which cycles participate / must be met.
struct cycle_scope {
    enum class kind { all, through_vertex, meeting_edges } k = kind::all;
    vertex_id v = -1;
    std::set<edge_id> edges;

    static cycle_scope all() { return {}; }
    static cycle_scope through_vertex(vertex_id v) {
        cycle_scope s;
        s.k = kind::through_vertex;
        s.v = v;
        return s;
    }
    static cycle_scope meeting_edges(std::set<edge_id> es) {
        cycle_scope s;
        s.k = kind::meeting_edges;
        s.edges = std::move(es);
        return s;
    }
};

namespace detail {

struct cycle_masks {
    std::vector<bitvec> edge_mask;    // per cycle, over edge positions
    std::vector<bitvec> vertex_mask;  // per cycle, over vertex positions
    std::map<edge_id, std::size_t> edge_pos;
    std::map<vertex_id, std::size_t> vertex_pos;
};

inline cycle_masks make_masks(const directed_graph& g, const std::vector<cycle>& cycles) {
    cycle_masks m;
    for (std::size_t i = 0; i < g.edges().size(); ++i) m.edge_pos[g.edges()[i].id] = i;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) m.vertex_pos[g.vertices()[i]] = i;
    for (const auto& c : cycles) {
        bitvec em(g.edges().size()), vm(g.vertices().size());
        for (edge_id e : c.edges) {
            em.set(m.edge_pos.at(e));
            vm.set(m.vertex_pos.at(g.edge(e).tail));
            vm.set(m.vertex_pos.at(g.edge(e).head));
        }
        m.edge_mask.push_back(em);
        m.vertex_mask.push_back(vm);
    }
    return m;
}

inline bool scope_admits(const directed_graph& g, const cycle& c, const cycle_scope& s) {
    switch (s.k) {
        case cycle_scope::kind::all:
            return true;
        case cycle_scope::kind::through_vertex:
            for (edge_id e : c.edges)
                if (g.edge(e).tail == s.v || g.edge(e).head == s.v) return true;
            return false;
        case cycle_scope::kind::meeting_edges:
            for (edge_id e : c.edges)
                if (s.edges.count(e)) return true;
            return false;
    }
    return false;
}

// Exact minimum hitting set: choose fewest ground elements so every target
// bitvec is hit.  Every target must intersect the ground mask.  Branch and
// bound seeded by a greedy cover; deterministic order (ascending positions).
inline std::vector<int> min_hitting_set(std::size_t width, const std::vector<bitvec>& targets,
                                        const bitvec& ground) {
    for (const auto& t : targets)
        if (!t.intersects(ground))
            throw internal_error("hitting-set target misses the ground set");
    // Greedy seed: repeatedly take the element covering the most targets.
    std::vector<int> best;
    {
        std::vector<bool> covered(targets.size(), false);
        std::size_t left = targets.size();
        std::vector<int> pick;
        while (left > 0) {
            int best_elem = -1;
            std::size_t best_gain = 0;
            for (int e : ground.bits()) {
                std::size_t gain = 0;
                for (std::size_t i = 0; i < targets.size(); ++i)
                    if (!covered[i] && targets[i].test(e)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_elem = e;
                }
            }
            pick.push_back(best_elem);
            for (std::size_t i = 0; i < targets.size(); ++i)
                if (!covered[i] && targets[i].test(best_elem)) {
                    covered[i] = true;
                    --left;
                }
        }
        std::sort(pick.begin(), pick.end());
        best = pick;
    }

    bitvec chosen(width);
    std::vector<int> stack;
    std::function<void()> search = [&]() {
        // First uncovered target.
        const bitvec* open = nullptr;
        for (const auto& t : targets)
            if (!t.intersects(chosen)) {
                open = &t;
                break;
            }
        if (!open) {
            if (stack.size() < best.size()) best = stack;
            return;
        }
        if (stack.size() + 1 >= best.size()) return;  // cannot improve
        bitvec cand = *open & ground;
        for (int e : cand.bits()) {
            chosen.set(e);
            stack.push_back(e);
            search();
            stack.pop_back();
            chosen.reset(e);
        }
    };
    search();
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace detail

// Largest number of pairwise disjoint cycles, all admitted by the scope.
// Exact branch and bound over the enumerated cycle list.
inline int packing_number(const directed_graph& g, packing_mode mode,
                          const cycle_scope& scope = cycle_scope::all(), const limits& lim = {}) {
    auto cycles = enumerate_cycles(g, lim);
    std::vector<cycle> pool;
    for (const auto& c : cycles)
        if (detail::scope_admits(g, c, scope)) pool.push_back(c);
    auto masks = detail::make_masks(g, pool);
    const auto& mask = mode == packing_mode::edge_disjoint ? masks.edge_mask : masks.vertex_mask;
    std::size_t width =
        mode == packing_mode::edge_disjoint ? g.edges().size() : g.vertices().size();

    int best = 0;
    bitvec used(width);
    std::function<void(std::size_t, int)> grow = [&](std::size_t from, int got) {
        best = std::max(best, got);
        if (got + static_cast<int>(pool.size() - from) <= best) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (mask[i].intersects(used)) continue;
            bitvec saved = used;
            used |= mask[i];
            grow(i + 1, got + 1);
            used = saved;
        }
    };
    grow(0, 0);
    return best;
}

// Spectrum: gamma[n] counts the maximal collections of exactly n pairwise
// disjoint cycles, where maximal means the residual graph — everything after
// deleting the collection's edges (edge mode) or all edges incident at its
// vertices (vertex mode) — is acyclic.  gamma[0] = 1 exactly on acyclic
// graphs (the empty collection).  `collections` lists each maximal collection
// as ascending indices into `cycles`.
struct spectrum {
    std::vector<cycle> cycles;
    std::vector<std::vector<int>> collections;
    std::map<int, long long> gamma;

    int alpha() const {
        int a = 0;
        for (const auto& [n, cnt] : gamma)
            if (cnt > 0) a = std::max(a, n);
        return a;
    }
};

inline spectrum cycle_spectrum(const directed_graph& g, packing_mode mode,
                               const limits& lim = {}) {
    spectrum sp;
    sp.cycles = enumerate_cycles(g, lim);
    auto masks = detail::make_masks(g, sp.cycles);
    const auto& mask = mode == packing_mode::edge_disjoint ? masks.edge_mask : masks.vertex_mask;

    // Positions of edges destroyed by taking a cycle: the cycle's own edges in
    // edge mode, every edge incident at one of its vertices in vertex mode.
    std::vector<bitvec> destroys;
    for (std::size_t i = 0; i < sp.cycles.size(); ++i) {
        if (mode == packing_mode::edge_disjoint) {
            destroys.push_back(masks.edge_mask[i]);
        } else {
            bitvec d(g.edges().size());
            for (std::size_t j = 0; j < g.edges().size(); ++j) {
                const auto& e = g.edges()[j];
                if (masks.vertex_mask[i].test(masks.vertex_pos.at(e.tail)) ||
                    masks.vertex_mask[i].test(masks.vertex_pos.at(e.head)))
                    d.set(j);
            }
            destroys.push_back(d);
        }
    }

    std::uint64_t nodes = 0;
    std::vector<int> chosen;
    bitvec used(mode == packing_mode::edge_disjoint ? g.edges().size() : g.vertices().size());
    bitvec removed(g.edges().size());
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        if (++nodes > lim.max_collection_nodes)
            throw guard_error("max-collection-nodes", lim.max_collection_nodes);
        bool extended = false;
        for (std::size_t i = from; i < sp.cycles.size(); ++i) {
            if (mask[i].intersects(used)) continue;
            extended = true;
            bitvec used_saved = used, removed_saved = removed;
            used |= mask[i];
            removed |= destroys[i];
            chosen.push_back(static_cast<int>(i));
            walk(i + 1);
            chosen.pop_back();
            used = used_saved;
            removed = removed_saved;
        }
        if (!extended) {
            // Leaf of the ascending-index search: `chosen` is recorded iff it
            // is maximal, which the residual acyclicity test decides.  Sets
            // extendable only by smaller indices are non-maximal duplicates
            // of other branches, and the residual test rejects them too.
            if (detail::residual_acyclic(g, removed)) {
                sp.collections.push_back(chosen);
                ++sp.gamma[static_cast<int>(chosen.size())];
            }
        }
    };
    walk(0);
    return sp;
}

// Minimum number of edges from the scope's ground set whose removal destroys
// every cycle the scope targets.
//   all:             ground = all edges,        targets = all cycles
//   through_vertex:  ground = edges at v,       targets = cycles through v
//   meeting_edges:   ground = the given edges,  targets = cycles meeting them
inline int feedback_number(const directed_graph& g,
                           const cycle_scope& scope = cycle_scope::all(), const limits& lim = {}) {
    auto cycles = enumerate_cycles(g, lim);
    std::map<edge_id, std::size_t> pos;
    for (std::size_t i = 0; i < g.edges().size(); ++i) pos[g.edges()[i].id] = i;

    bitvec ground(g.edges().size());
    switch (scope.k) {
        case cycle_scope::kind::all:
            for (auto& [e, p] : pos) ground.set(p);
            break;
        case cycle_scope::kind::through_vertex:
            for (edge_id e : g.incident_edges(scope.v)) ground.set(pos.at(e));
            break;
        case cycle_scope::kind::meeting_edges:
            for (edge_id e : scope.edges)
                if (pos.count(e)) ground.set(pos.at(e));
            break;
    }
    std::vector<bitvec> targets;
    for (const auto& c : cycles) {
        if (!detail::scope_admits(g, c, scope)) continue;
        bitvec t(g.edges().size());
        for (edge_id e : c.edges)
            if (ground.test(pos.at(e))) t.set(pos.at(e));
        targets.push_back(t);
    }
    return static_cast<int>(detail::min_hitting_set(g.edges().size(), targets, ground).size());
}

// alpha_v / alpha_E: maximum number of edge-disjoint cycles all admitted by
// the scope.
inline int local_packing(const directed_graph& g, const cycle_scope& scope,
                         const limits& lim = {}) {
    return packing_number(g, packing_mode::edge_disjoint, scope, lim);
}

struct path_numbers_result {
    bool has_paths = false;  // merged vertex survived contraction
    int alpha = 0;           // max edge-disjoint u->v paths (cycles at u#v)
    int beta = 0;            // min edges at u#v destroying all of them
    path_contract_result contraction;
};

// Path packing numbers of u -> v through the contraction G_{u->v}.
inline path_numbers_result path_numbers(const directed_graph& g, vertex_id u, vertex_id v,
                                        const limits& lim = {}) {
    path_numbers_result r;
    r.contraction = path_contract(g, u, v);
    if (!r.contraction.has_merged_vertex) return r;
    r.has_paths = true;
    auto scope = cycle_scope::through_vertex(r.contraction.merged_vertex);
    r.alpha = local_packing(r.contraction.graph, scope, lim);
    r.beta = feedback_number(r.contraction.graph, scope, lim);
    return r;
}

struct strong_via_double_result {
    bipartite_double_result doubled;
    int alpha_strong = 0;   // alpha of the double = vertex-disjoint alpha here
    spectrum dbl_spectrum;  // edge-mode spectrum of the double
    std::map<int, long long> gamma_strong;  // equals dbl_spectrum.gamma
};

// Strong quantities computed on the bipartite double: every cycle of the
// double alternates original and transfer edges, and edge-disjoint cycles
// there project to vertex-disjoint cycles here.
inline strong_via_double_result strong_via_double(const directed_graph& g,
                                                  const limits& lim = {}) {
    strong_via_double_result r;
    r.doubled = bipartite_double(g);
    r.dbl_spectrum = cycle_spectrum(r.doubled.graph, packing_mode::edge_disjoint, lim);
    r.alpha_strong = r.dbl_spectrum.alpha();
    r.gamma_strong = r.dbl_spectrum.gamma;
    return r;
}

// --- Undirected cycles ------------------------------------------------------

// A simple undirected cycle as a set of edge ids: a loop; a pair of parallel
// edges; or a circuit of >= 3 distinct vertices.  Canonical form: sorted ids.
inline std::vector<std::vector<edge_id>> enumerate_undirected_cycles(const undirected_graph& g,
                                                                     const limits& lim = {}) {
    std::vector<std::vector<edge_id>> found;
    auto emit = [&](std::vector<edge_id> c) {
        std::sort(c.begin(), c.end());
        found.push_back(std::move(c));
        if (found.size() > lim.max_cycles) throw guard_error("max-cycles", lim.max_cycles);
    };
    for (const auto& e : g.edges())
        if (e.is_loop()) emit({e.id});

    // Anchor each cycle at its minimal edge id e0 = {a,b}: walk simple paths
    // from b back to a using only edges with larger ids and fresh vertices.
    std::vector<edge_id> path;
    std::set<vertex_id> on_path;
    std::function<void(edge_id, vertex_id, vertex_id)> extend = [&](edge_id e0, vertex_id target,
                                                                    vertex_id at) {
        for (edge_id eid : g.incident_edges(at)) {
            if (eid <= e0) continue;
            const auto& e = g.edge(eid);
            if (e.is_loop()) continue;
            vertex_id other = e.a == at ? e.b : e.a;
            if (other == target) {
                path.push_back(eid);
                std::vector<edge_id> c = {e0};
                c.insert(c.end(), path.begin(), path.end());
                emit(std::move(c));
                path.pop_back();
            } else if (!on_path.count(other)) {
                path.push_back(eid);
                on_path.insert(other);
                extend(e0, target, other);
                on_path.erase(other);
                path.pop_back();
            }
        }
    };
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        path.clear();
        on_path = {e.a, e.b};
        extend(e.id, e.a, e.b);
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Max edge-disjoint undirected cycles, optionally all through one vertex.
inline int undirected_packing(const undirected_graph& g,
                              std::optional<vertex_id> through = std::nullopt,
                              const limits& lim = {}) {
    auto cycles = enumerate_undirected_cycles(g, lim);
    std::map<edge_id, std::size_t> pos;
    for (std::size_t i = 0; i < g.edges().size(); ++i) pos[g.edges()[i].id] = i;
    std::vector<bitvec> masks;
    for (const auto& c : cycles) {
        if (through) {
            bool hits = false;
            for (edge_id e : c)
                if (g.edge(e).a == *through || g.edge(e).b == *through) hits = true;
            if (!hits) continue;
        }
        bitvec m(g.edges().size());
        for (edge_id e : c) m.set(pos.at(e));
        masks.push_back(m);
    }
    int best = 0;
    bitvec used(g.edges().size());
    std::function<void(std::size_t, int)> grow = [&](std::size_t from, int got) {
        best = std::max(best, got);
        if (got + static_cast<int>(masks.size() - from) <= best) return;
        for (std::size_t i = from; i < masks.size(); ++i) {
            if (masks[i].intersects(used)) continue;
            bitvec saved = used;
            used |= masks[i];
            grow(i + 1, got + 1);
            used = saved;
        }
    };
    grow(0, 0);
    return best;
}

// Min edges destroying all undirected cycles (optionally: edges at v
// destroying all cycles through v).
inline int undirected_feedback(const undirected_graph& g,
                               std::optional<vertex_id> at = std::nullopt,
                               const limits& lim = {}) {
    auto cycles = enumerate_undirected_cycles(g, lim);
    std::map<edge_id, std::size_t> pos;
    for (std::size_t i = 0; i < g.edges().size(); ++i) pos[g.edges()[i].id] = i;
    bitvec ground(g.edges().size());
    if (at) {
        for (edge_id e : g.incident_edges(*at)) ground.set(pos.at(e));
    } else {
        for (auto& [e, p] : pos) ground.set(p);
    }
    std::vector<bitvec> targets;
    for (const auto& c : cycles) {
        if (at) {
            bool hits = false;
            for (edge_id e : c)
                if (g.edge(e).a == *at || g.edge(e).b == *at) hits = true;
            if (!hits) continue;
        }
        bitvec t(g.edges().size());
        for (edge_id e : c)
            if (ground.test(pos.at(e))) t.set(pos.at(e));
        targets.push_back(t);
    }
    return static_cast<int>(detail::min_hitting_set(g.edges().size(), targets, ground).size());
}

}  // namespace cyclepack
