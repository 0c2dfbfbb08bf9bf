#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclepack/guards.hpp"

namespace cyclepack {

using vertex_id = int;
using edge_id = int;

struct directed_edge {
    edge_id id;
    vertex_id tail;
    vertex_id head;
    bool is_loop() const { return tail == head; }
};

// Directed multigraph.  The vertex set is exactly the set of edge endpoints:
// degree-0 vertices cannot be represented (parsers drop them with a warning).
// Edge ids are distinct; parsers assign them contiguously from 0 in input
// order, and every transform documents which ids survive (surviving edges
// always keep their ids, so ids downstream double as polynomial variable
// indices).
class directed_graph {
  public:
    directed_graph() = default;

    explicit directed_graph(std::vector<directed_edge> edges,
                            std::map<vertex_id, std::string> vertex_names = {},
                            std::map<edge_id, std::string> edge_labels = {})
        : edges_(std::move(edges)) {
        std::sort(edges_.begin(), edges_.end(),
                  [](const directed_edge& a, const directed_edge& b) { return a.id < b.id; });
        std::set<vertex_id> vs;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i > 0 && edges_[i].id == edges_[i - 1].id)
                throw std::invalid_argument("duplicate edge id " + std::to_string(edges_[i].id));
            vs.insert(edges_[i].tail);
            vs.insert(edges_[i].head);
        }
        vertices_.assign(vs.begin(), vs.end());
        for (const auto& e : edges_) {
            out_[e.tail].push_back(e.id);
            in_[e.head].push_back(e.id);
        }
        // Keep only names/labels of ids that exist.
        for (auto& [v, name] : vertex_names)
            if (vs.count(v)) vertex_names_[v] = name;
        for (auto& [e, lab] : edge_labels)
            if (has_edge(e)) edge_labels_[e] = lab;
    }

    const std::vector<vertex_id>& vertices() const { return vertices_; }
    const std::vector<directed_edge>& edges() const { return edges_; }

    bool has_vertex(vertex_id v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }
    bool has_edge(edge_id e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                                   [](const directed_edge& d, edge_id x) { return d.id < x; });
        return it != edges_.end() && it->id == e;
    }
    const directed_edge& edge(edge_id e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                                   [](const directed_edge& d, edge_id x) { return d.id < x; });
        if (it == edges_.end() || it->id != e)
            throw std::invalid_argument("unknown edge id " + std::to_string(e));
        return *it;
    }

    // Out-/in-edge ids at v, ascending.  A loop appears in both lists.
    std::vector<edge_id> out_edges(vertex_id v) const { return adjacency(out_, v); }
    std::vector<edge_id> in_edges(vertex_id v) const { return adjacency(in_, v); }

    // All edge ids incident at v (a loop listed once), ascending.
    std::vector<edge_id> incident_edges(vertex_id v) const {
        std::vector<edge_id> a = out_edges(v), b = in_edges(v), u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        return u;
    }

    // Loop edge ids at v, ascending.
    std::vector<edge_id> loops_at(vertex_id v) const {
        std::vector<edge_id> out;
        for (edge_id e : out_edges(v))
            if (edge(e).is_loop()) out.push_back(e);
        return out;
    }

    // Degree with loops counted twice.
    int degree(vertex_id v) const {
        return static_cast<int>(out_edges(v).size() + in_edges(v).size());
    }

    const std::map<vertex_id, std::string>& vertex_names() const { return vertex_names_; }
    const std::map<edge_id, std::string>& edge_labels() const { return edge_labels_; }

    std::string vertex_name(vertex_id v) const {
        auto it = vertex_names_.find(v);
        return it != vertex_names_.end() ? it->second : std::to_string(v);
    }

    // Resolve a vertex by display name first, then by numeric id.
    vertex_id resolve_vertex(const std::string& token) const {
        for (const auto& [v, name] : vertex_names_)
            if (name == token) return v;
        try {
            std::size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos == token.size() && has_vertex(v)) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("unknown vertex '" + token + "'");
    }

    bool operator==(const directed_graph& o) const {
        if (vertices_ != o.vertices_ || edges_.size() != o.edges_.size()) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].id != o.edges_[i].id || edges_[i].tail != o.edges_[i].tail ||
                edges_[i].head != o.edges_[i].head)
                return false;
        return true;
    }

  private:
    static std::vector<edge_id> adjacency(const std::map<vertex_id, std::vector<edge_id>>& m,
                                          vertex_id v) {
        auto it = m.find(v);
        if (it == m.end()) return {};
        std::vector<edge_id> out = it->second;
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<vertex_id> vertices_;
    std::vector<directed_edge> edges_;
    std::map<vertex_id, std::vector<edge_id>> out_;
    std::map<vertex_id, std::vector<edge_id>> in_;
    std::map<vertex_id, std::string> vertex_names_;
    std::map<edge_id, std::string> edge_labels_;
};

struct undirected_edge {
    edge_id id;
    vertex_id a;  // endpoint order is kept as parsed; it fixes the reference
    vertex_id b;  // orientation used by the integer invariants
    bool is_loop() const { return a == b; }
};

// Undirected multigraph with the same id conventions as directed_graph.
class undirected_graph {
  public:
    undirected_graph() = default;

    explicit undirected_graph(std::vector<undirected_edge> edges,
                              std::map<vertex_id, std::string> vertex_names = {},
                              std::map<edge_id, std::string> edge_labels = {})
        : edges_(std::move(edges)) {
        std::sort(edges_.begin(), edges_.end(),
                  [](const undirected_edge& x, const undirected_edge& y) { return x.id < y.id; });
        std::set<vertex_id> vs;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i > 0 && edges_[i].id == edges_[i - 1].id)
                throw std::invalid_argument("duplicate edge id " + std::to_string(edges_[i].id));
            vs.insert(edges_[i].a);
            vs.insert(edges_[i].b);
        }
        vertices_.assign(vs.begin(), vs.end());
        for (const auto& e : edges_) {
            incident_[e.a].push_back(e.id);
            if (!e.is_loop()) incident_[e.b].push_back(e.id);
        }
        for (auto& [v, name] : vertex_names)
            if (vs.count(v)) vertex_names_[v] = name;
        for (auto& [e, lab] : edge_labels)
            if (has_edge(e)) edge_labels_[e] = lab;
    }

    const std::vector<vertex_id>& vertices() const { return vertices_; }
    const std::vector<undirected_edge>& edges() const { return edges_; }

    bool has_vertex(vertex_id v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }
    bool has_edge(edge_id e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                                   [](const undirected_edge& d, edge_id x) { return d.id < x; });
        return it != edges_.end() && it->id == e;
    }
    const undirected_edge& edge(edge_id e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                                   [](const undirected_edge& d, edge_id x) { return d.id < x; });
        if (it == edges_.end() || it->id != e)
            throw std::invalid_argument("unknown edge id " + std::to_string(e));
        return *it;
    }

    // Incident edge ids at v (a loop listed once), ascending.
    std::vector<edge_id> incident_edges(vertex_id v) const {
        auto it = incident_.find(v);
        if (it == incident_.end()) return {};
        std::vector<edge_id> out = it->second;
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<edge_id> loops_at(vertex_id v) const {
        std::vector<edge_id> out;
        for (edge_id e : incident_edges(v))
            if (edge(e).is_loop()) out.push_back(e);
        return out;
    }

    // Degree with loops counted twice.
    int degree(vertex_id v) const {
        return static_cast<int>(incident_edges(v).size() + loops_at(v).size());
    }

    const std::map<vertex_id, std::string>& vertex_names() const { return vertex_names_; }
    const std::map<edge_id, std::string>& edge_labels() const { return edge_labels_; }

    std::string vertex_name(vertex_id v) const {
        auto it = vertex_names_.find(v);
        return it != vertex_names_.end() ? it->second : std::to_string(v);
    }

    vertex_id resolve_vertex(const std::string& token) const {
        for (const auto& [v, name] : vertex_names_)
            if (name == token) return v;
        try {
            std::size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos == token.size() && has_vertex(v)) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("unknown vertex '" + token + "'");
    }

    // Reference orientation: every edge directed a -> b as parsed.
    directed_graph oriented() const {
        std::vector<directed_edge> de;
        de.reserve(edges_.size());
        for (const auto& e : edges_) de.push_back({e.id, e.a, e.b});
        return directed_graph(de, vertex_names_, edge_labels_);
    }

  private:
    std::vector<vertex_id> vertices_;
    std::vector<undirected_edge> edges_;
    std::map<vertex_id, std::vector<edge_id>> incident_;
    std::map<vertex_id, std::string> vertex_names_;
    std::map<edge_id, std::string> edge_labels_;
};

// Vertex-by-edge incidence matrix over Z: entry +1 if the vertex is the head
// but not the tail, -1 if the tail but not the head, 0 otherwise (so loop
// columns are zero).  Rows follow vertices() order, columns edges() order.
inline std::vector<std::vector<int>> incidence_matrix(const directed_graph& g) {
    std::vector<std::vector<int>> rows(g.vertices().size(),
                                       std::vector<int>(g.edges().size(), 0));
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        const auto& e = g.edges()[j];
        if (e.is_loop()) continue;
        auto vpos = [&](vertex_id v) {
            return static_cast<std::size_t>(
                std::lower_bound(g.vertices().begin(), g.vertices().end(), v) -
                g.vertices().begin());
        };
        rows[vpos(e.head)][j] += 1;
        rows[vpos(e.tail)][j] -= 1;
    }
    return rows;
}

inline undirected_graph underlying_undirected(const directed_graph& g) {
    std::vector<undirected_edge> ue;
    ue.reserve(g.edges().size());
    for (const auto& e : g.edges()) ue.push_back({e.id, e.tail, e.head});
    return undirected_graph(ue, g.vertex_names(), g.edge_labels());
}

// Remove the given edges; surviving edges keep their ids, vertices left with
// degree 0 disappear (the vertex set is induced by the surviving edges).
inline directed_graph remove_edges(const directed_graph& g, const std::set<edge_id>& drop) {
    std::vector<directed_edge> keep;
    for (const auto& e : g.edges())
        if (!drop.count(e.id)) keep.push_back(e);
    return directed_graph(keep, g.vertex_names(), g.edge_labels());
}

// Remove a vertex and every edge incident at it; surviving ids preserved.
inline directed_graph remove_vertex(const directed_graph& g, vertex_id v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex");
    std::vector<directed_edge> keep;
    for (const auto& e : g.edges())
        if (e.tail != v && e.head != v) keep.push_back(e);
    return directed_graph(keep, g.vertex_names(), g.edge_labels());
}

// Identify v into u: the merged vertex keeps u's id, every edge keeps its id
// with endpoints relabelled (parallel edges and loops arise naturally).
inline directed_graph identify_vertices(const directed_graph& g, vertex_id u, vertex_id v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("unknown vertex");
    if (u == v) throw std::invalid_argument("identify_vertices needs distinct vertices");
    std::vector<directed_edge> es;
    es.reserve(g.edges().size());
    for (const auto& e : g.edges())
        es.push_back({e.id, e.tail == v ? u : e.tail, e.head == v ? u : e.head});
    auto names = g.vertex_names();
    std::string merged = g.vertex_name(u) + "#" + g.vertex_name(v);
    names.erase(v);
    names[u] = merged;
    return directed_graph(es, names, g.edge_labels());
}

struct path_contract_result {
    directed_graph graph;
    bool has_merged_vertex = false;  // false: the merged vertex lost all edges
    vertex_id merged_vertex = -1;    // u's id when present
    std::set<edge_id> removed_edges;
};

// Path contraction u -> v: delete every edge into u and every edge out of v,
// then identify u and v.  Directed u-v paths of the original graph correspond
// to directed cycles through the merged vertex.  Surviving edges keep ids.
inline path_contract_result path_contract(const directed_graph& g, vertex_id u, vertex_id v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("unknown vertex");
    if (u == v) throw std::invalid_argument("path_contract needs distinct vertices");
    path_contract_result r;
    for (const auto& e : g.edges())
        if (e.head == u || e.tail == v) r.removed_edges.insert(e.id);
    directed_graph pruned = remove_edges(g, r.removed_edges);
    // The merged vertex survives only if some remaining edge touches u or v.
    bool touched = false;
    for (const auto& e : pruned.edges())
        if (e.tail == u || e.head == v || e.tail == v || e.head == u) touched = true;
    if (!touched) {
        r.graph = pruned;
        r.has_merged_vertex = false;
        return r;
    }
    bool has_u = pruned.has_vertex(u), has_v = pruned.has_vertex(v);
    if (has_u && has_v) {
        r.graph = identify_vertices(pruned, u, v);
    } else if (has_u || has_v) {
        // Only one endpoint still carries edges; relabel v's to u if needed.
        if (has_v) {
            std::vector<directed_edge> es;
            for (const auto& e : pruned.edges())
                es.push_back({e.id, e.tail == v ? u : e.tail, e.head == v ? u : e.head});
            auto names = pruned.vertex_names();
            std::string merged = g.vertex_name(u) + "#" + g.vertex_name(v);
            names.erase(v);
            names[u] = merged;
            r.graph = directed_graph(es, names, pruned.edge_labels());
        } else {
            auto names = pruned.vertex_names();
            names[u] = g.vertex_name(u) + "#" + g.vertex_name(v);
            r.graph = directed_graph(
                std::vector<directed_edge>(pruned.edges().begin(), pruned.edges().end()), names,
                pruned.edge_labels());
        }
    }
    r.has_merged_vertex = true;
    r.merged_vertex = u;
    return r;
}

// Subdivide edge x by a fresh vertex w (max vertex id + 1): the tail segment
// tail(x) -> w keeps id x, the head segment w -> head(x) gets max edge id + 1.
struct subdivide_result {
    directed_graph graph;
    vertex_id new_vertex;
    edge_id tail_segment;
    edge_id head_segment;
};

inline subdivide_result subdivide_edge(const directed_graph& g, edge_id x) {
    const directed_edge& e = g.edge(x);
    vertex_id w = g.vertices().empty() ? 0 : g.vertices().back() + 1;
    edge_id fresh = g.edges().empty() ? 0 : g.edges().back().id + 1;
    std::vector<directed_edge> es;
    for (const auto& d : g.edges()) {
        if (d.id == x)
            es.push_back({x, d.tail, w});
        else
            es.push_back(d);
    }
    es.push_back({fresh, w, e.head});
    return {directed_graph(es, g.vertex_names(), g.edge_labels()), w, x, fresh};
}

// Bipartite double: each vertex v splits into an out-copy and an in-copy; an
// original edge u -> v is rerouted out(u) -> in(v) keeping its id, and a fresh
// transfer edge z_v : in(v) -> out(v) is appended per vertex in sorted vertex
// order.  Edge-disjoint cycles here correspond to vertex-disjoint cycles in
// the original graph; every cycle alternates original and transfer edges.
struct bipartite_double_result {
    directed_graph graph;
    std::map<vertex_id, vertex_id> out_copy;   // v -> out(v)
    std::map<vertex_id, vertex_id> in_copy;    // v -> in(v)
    std::map<vertex_id, edge_id> z_edge;       // v -> id of z_v
};

inline bipartite_double_result bipartite_double(const directed_graph& g) {
    bipartite_double_result r;
    int i = 0;
    for (vertex_id v : g.vertices()) {
        r.out_copy[v] = 2 * i;
        r.in_copy[v] = 2 * i + 1;
        ++i;
    }
    std::vector<directed_edge> es;
    std::map<vertex_id, std::string> names;
    std::map<edge_id, std::string> labels = g.edge_labels();
    for (const auto& e : g.edges()) es.push_back({e.id, r.out_copy[e.tail], r.in_copy[e.head]});
    edge_id fresh = g.edges().empty() ? 0 : g.edges().back().id + 1;
    for (vertex_id v : g.vertices()) {
        r.z_edge[v] = fresh;
        es.push_back({fresh, r.in_copy[v], r.out_copy[v]});
        labels[fresh] = "z_" + g.vertex_name(v);
        ++fresh;
    }
    for (vertex_id v : g.vertices()) {
        names[r.out_copy[v]] = g.vertex_name(v) + "_out";
        names[r.in_copy[v]] = g.vertex_name(v) + "_in";
    }
    r.graph = directed_graph(es, names, labels);
    return r;
}

}  // namespace cyclepack
