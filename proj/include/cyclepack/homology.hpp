#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclepack/gf2.hpp"
#include "cyclepack/graph.hpp"
#include "cyclepack/groebner.hpp"
#include "cyclepack/guards.hpp"
#include "cyclepack/intlinalg.hpp"
#include "cyclepack/relations.hpp"

namespace cyclepack {

// A degree-1 graded piece of the zeroth homology presentation: an abelian
// group reported by free rank, invariant factors, and a spanning witness.
struct graded_piece_report {
    int degree = 1;
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;        // invariant factors > 1, ascending
    std::vector<edge_id> witness_edges;    // edge classes spanning the piece
    std::size_t gf2_dimension = 0;         // dim of the piece tensored with Z/2
};

namespace detail {

class union_find {
  public:
    explicit union_find(const std::vector<vertex_id>& vs) {
        for (vertex_id v : vs) parent_[v] = v;
    }
    vertex_id find(vertex_id v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    // Returns false when a and b were already connected.
    bool unite(vertex_id a, vertex_id b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

  private:
    std::map<vertex_id, vertex_id> parent_;
};

// Edges outside a spanning forest built greedily in ascending edge id order
// (loops are never forest edges).
template <typename Graph>
std::vector<edge_id> non_forest_edges(const Graph& g) {
    union_find uf(g.vertices());
    std::vector<edge_id> out;
    for (const auto& e : g.edges()) {
        vertex_id a, b;
        if constexpr (requires { e.tail; }) {
            a = e.tail;
            b = e.head;
        } else {
            a = e.a;
            b = e.b;
        }
        if (!uf.unite(a, b)) out.push_back(e.id);
    }
    return out;
}

inline std::size_t even_count(const std::vector<mpz_class>& torsion) {
    std::size_t c = 0;
    for (const auto& d : torsion)
        if (d % 2 == 0) ++c;
    return c;
}

// Rows of the degree-1 undirected generators: coefficient of edge e in the
// row of vertex v is its incidence multiplicity (2 for a loop at v).
inline int_matrix omega_degree_one_matrix(const undirected_graph& g) {
    std::map<edge_id, std::size_t> pos;
    for (std::size_t i = 0; i < g.edges().size(); ++i) pos[g.edges()[i].id] = i;
    int_matrix m(g.vertices().size(), g.edges().size());
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
        for (edge_id e : g.incident_edges(g.vertices()[i]))
            m.at(i, pos.at(e)) = g.edge(e).is_loop() ? 2 : 1;
    return m;
}

}  // namespace detail

// H at degree 1 for a directed graph: Z^E modulo the row lattice of the
// vertex-edge incidence matrix.  Cross-checked against the forest count.
inline graded_piece_report h0_degree_one(const directed_graph& g) {
    graded_piece_report rep;
    auto q = quotient_by_row_lattice(int_matrix::from_int_rows(incidence_matrix(g)));
    rep.free_rank = q.free_rank;
    rep.torsion = q.torsion;
    rep.witness_edges = detail::non_forest_edges(g);
    rep.gf2_dimension = rep.free_rank + detail::even_count(rep.torsion);

    // Second route: the quotient must be free of rank |E| - |V| + #components.
    detail::union_find uf(g.vertices());
    std::size_t components = g.vertices().size();
    for (const auto& e : g.edges())
        if (uf.unite(e.tail, e.head)) --components;
    std::size_t expected = g.edges().size() - g.vertices().size() + components;
    if (!rep.torsion.empty() || rep.free_rank != expected)
        throw internal_error("degree-1 homology disagrees with the forest count");
    if (rep.witness_edges.size() != rep.free_rank)
        throw internal_error("witness size disagrees with the degree-1 rank");
    return rep;
}

// A_1(v): the E(v)-coordinate sublattice modulo its intersection with the
// incidence row lattice M.  The intersection is (left kernel of the
// complement columns) * A, projected to the E(v) coordinates.
inline graded_piece_report a1_of_vertex(const directed_graph& g, vertex_id v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    auto a = int_matrix::from_int_rows(incidence_matrix(g));
    std::map<edge_id, std::size_t> pos;
    for (std::size_t i = 0; i < g.edges().size(); ++i) pos[g.edges()[i].id] = i;

    std::vector<edge_id> local = g.incident_edges(v);
    std::vector<std::size_t> local_pos, complement_pos;
    for (edge_id e : local) local_pos.push_back(pos.at(e));
    for (const auto& e : g.edges())
        if (std::find(local.begin(), local.end(), e.id) == local.end())
            complement_pos.push_back(pos.at(e.id));

    int_matrix k = left_kernel(a.submatrix_columns(complement_pos));
    int_matrix inside = (k * a).submatrix_columns(local_pos);

    graded_piece_report rep;
    auto q = quotient_by_row_lattice(inside);
    rep.free_rank = q.free_rank;
    rep.torsion = q.torsion;
    rep.witness_edges = local;
    rep.gf2_dimension = rep.free_rank + detail::even_count(rep.torsion);
    return rep;
}

// U at degree 1 for an undirected graph: Z^E modulo the rows e_1(E(v)) with
// loops doubled.  The GF(2) dimension is cross-checked against the mod-2
// row rank.
inline graded_piece_report u_degree_one(const undirected_graph& g) {
    graded_piece_report rep;
    auto omega = detail::omega_degree_one_matrix(g);
    auto q = quotient_by_row_lattice(omega);
    rep.free_rank = q.free_rank;
    rep.torsion = q.torsion;
    rep.witness_edges = detail::non_forest_edges(g);
    rep.gf2_dimension = rep.free_rank + detail::even_count(rep.torsion);

    std::vector<bitvec> mod2_rows;
    for (std::size_t i = 0; i < omega.rows(); ++i) {
        bitvec r(omega.cols());
        for (std::size_t j = 0; j < omega.cols(); ++j)
            if (omega.at(i, j) % 2 != 0) r.set(j);
        mod2_rows.push_back(r);
    }
    std::size_t mod2_dim = g.edges().size() - gf2_rank(g.edges().size(), mod2_rows);
    if (mod2_dim != rep.gf2_dimension)
        throw internal_error("GF(2) dimension of the degree-1 piece disagrees between routes");
    return rep;
}

// The Z/2 cycle detectors.  S is the GF(2) span of the per-vertex parity
// rows (loops excluded: their coefficient 2 vanishes mod 2).
struct z2_report {
    std::size_t edge_count = 0;
    std::size_t s_dimension = 0;
    std::size_t global_bound = 0;                  // |E| - dim S
    std::map<vertex_id, std::size_t> vertex_bound; // |E(v)| - dim((Z2 E(v)) cap S)
    std::map<edge_id, bool> edge_in_s;             // true iff e lies on no cycle
};

inline z2_report z2_detectors(const undirected_graph& g) {
    std::map<edge_id, std::size_t> pos;
    for (std::size_t i = 0; i < g.edges().size(); ++i) pos[g.edges()[i].id] = i;

    gf2_space s(g.edges().size());
    for (vertex_id v : g.vertices()) {
        bitvec row(g.edges().size());
        for (edge_id e : g.incident_edges(v))
            if (!g.edge(e).is_loop()) row.set(pos.at(e));
        s.add(row);
    }

    z2_report rep;
    rep.edge_count = g.edges().size();
    rep.s_dimension = s.rank();
    rep.global_bound = rep.edge_count - rep.s_dimension;
    for (vertex_id v : g.vertices()) {
        std::vector<std::size_t> local;
        for (edge_id e : g.incident_edges(v)) local.push_back(pos.at(e));
        rep.vertex_bound[v] =
            local.size() - gf2_intersection_dim_with_units(s, local);
    }
    for (const auto& e : g.edges()) {
        bitvec unit(g.edges().size());
        unit.set(pos.at(e.id));
        rep.edge_in_s[e.id] = s.contains(unit);
    }
    return rep;
}

// Forest certificate.  The direct route is the union-find forest test; the
// algebraic route asks whether every edge variable reduces to zero modulo
// the incidence ideal.  The two must agree.
inline bool tree_certificate(const directed_graph& g, const limits& lim = {}) {
    detail::union_find uf(g.vertices());
    bool forest = true;
    for (const auto& e : g.edges())
        if (!uf.unite(e.tail, e.head)) forest = false;

    std::vector<int> vars;
    for (const auto& e : g.edges()) vars.push_back(e.id);
    auto b = buchberger(incidence_relations(g).nonzero(), vars, lim);
    bool algebraic = true;
    for (const auto& e : g.edges())
        if (!ideal_member(polynomial::variable(e.id), b)) algebraic = false;

    if (forest != algebraic)
        throw internal_error("forest certificate disagrees with the ideal route");
    return forest;
}

inline bool tree_certificate(const undirected_graph& g) {
    detail::union_find uf(g.vertices());
    bool forest = true;
    for (const auto& e : g.edges())
        if (!uf.unite(e.a, e.b)) forest = false;

    auto piece = u_degree_one(g);
    bool algebraic = piece.free_rank == 0 && piece.torsion.empty();
    if (forest != algebraic)
        throw internal_error("forest certificate disagrees with the degree-1 piece");
    return forest;
}

// Site-by-site verification of the ideal-level surgery identities: deleting
// an edge, deleting a pendant vertex with its edge, contracting across a
// degree-two vertex, fusing two vertices, and stripping loop variables.
struct removal_identity_report {
    int edge_removal_sites = 0;
    int end_removal_sites = 0;
    int merge_sites = 0;
    int fuse_sites = 0;
    bool strip_loops_checked = false;
    std::vector<std::string> failures;  // human-readable per-site diagnostics
    bool all_ok() const { return failures.empty(); }
};

namespace detail {

inline std::vector<polynomial> substituted_gens(const std::vector<polynomial>& gens, int var,
                                                const polynomial& repl) {
    std::vector<polynomial> out;
    for (const auto& p : gens) {
        polynomial q = p.substitute(var, repl);
        if (!q.is_zero()) out.push_back(q);
    }
    return out;
}

}  // namespace detail

inline removal_identity_report verify_removal_identities(const directed_graph& g,
                                                         const limits& lim = {}) {
    removal_identity_report rep;
    auto gens = incidence_relations(g).nonzero();
    std::vector<int> vars;
    for (const auto& e : g.edges()) vars.push_back(e.id);

    // Edge removal: substituting x -> 0 presents the ideal of G - x.
    for (const auto& e : g.edges()) {
        directed_graph without = remove_edges(g, {e.id});
        std::vector<int> rest;
        for (int v : vars)
            if (v != e.id) rest.push_back(v);
        auto image = detail::substituted_gens(gens, e.id, polynomial());
        auto direct = incidence_relations(without).nonzero();
        ++rep.edge_removal_sites;
        if (!ideal_equal(image, direct, rest, lim))
            rep.failures.push_back("edge removal mismatch at edge " + std::to_string(e.id));
    }

    // End removal: a pendant vertex contributes its edge variable as a
    // generator, and eliminating that variable presents the smaller graph.
    auto basis = buchberger(gens, vars, lim);
    for (vertex_id v : g.vertices()) {
        if (g.degree(v) != 1) continue;
        edge_id x = g.incident_edges(v).front();
        directed_graph without = remove_vertex(g, v);
        std::vector<int> rest;
        for (int w : vars)
            if (w != x) rest.push_back(w);
        ++rep.end_removal_sites;
        if (!ideal_member(polynomial::variable(x), basis)) {
            rep.failures.push_back("pendant edge variable " + std::to_string(x) +
                                   " is not an ideal member");
            continue;
        }
        auto eliminated = eliminate(gens, vars, rest, lim);
        if (!ideal_equal(eliminated.gens, incidence_relations(without).nonzero(), rest, lim))
            rep.failures.push_back("end removal mismatch at vertex " + std::to_string(v));
    }

    // Degree-two merge: with in-edge x and out-edge y at v, substituting
    // y -> x presents the graph with the path contracted to one edge.
    for (vertex_id v : g.vertices()) {
        auto in = g.in_edges(v), out = g.out_edges(v);
        if (in.size() != 1 || out.size() != 1) continue;
        edge_id x = in.front(), y = out.front();
        if (x == y) continue;  // a loop is not a through-path
        std::vector<directed_edge> edges;
        for (const auto& e : g.edges()) {
            if (e.id == x || e.id == y) continue;
            edges.push_back(e);
        }
        edges.push_back({x, g.edge(x).tail, g.edge(y).head});
        directed_graph merged(edges);
        std::vector<int> rest;
        for (int w : vars)
            if (w != y) rest.push_back(w);
        auto image = detail::substituted_gens(gens, y, polynomial::variable(x));
        ++rep.merge_sites;
        if (!ideal_equal(image, incidence_relations(merged).nonzero(), rest, lim))
            rep.failures.push_back("degree-two merge mismatch at vertex " + std::to_string(v));
    }

    // Fuse: every relation of the fused graph already lies in the ideal.
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices().size(); ++j) {
            directed_graph fused = identify_vertices(g, g.vertices()[i], g.vertices()[j]);
            ++rep.fuse_sites;
            for (const auto& p : incidence_relations(fused).nonzero())
                if (!ideal_member(p, basis)) {
                    rep.failures.push_back(
                        "fused relation escapes the ideal at pair " +
                        std::to_string(g.vertices()[i]) + "," + std::to_string(g.vertices()[j]));
                    break;
                }
        }

    // Stripping loop variables from both sides of every relation family
    // leaves the ideal unchanged.
    rep.strip_loops_checked = true;
    if (!ideal_equal(gens, incidence_relations(g, true).nonzero(), vars, lim))
        rep.failures.push_back("loop stripping changed the ideal");

    return rep;
}

}  // namespace cyclepack
