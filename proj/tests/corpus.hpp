#pragma once

// Deterministic graph corpora for tests: exhaustive small multigraphs and
// seeded random ones.  A labeled multigraph is a multiset of ordered vertex
// pairs; edge ids are then assigned in the multiset's canonical order, which
// covers every labeled multigraph exactly once (edge-id relabelings are
// isomorphisms fixing every quantity under test).

#include <cstdint>
#include <random>
#include <vector>

#include "cyclepack/graph.hpp"

namespace corpus {

using cyclepack::directed_edge;
using cyclepack::directed_graph;
using cyclepack::undirected_edge;
using cyclepack::undirected_graph;

// Every labeled directed multigraph with at most max_edges edges on the
// vertex set {0..max_vertices-1} (as multisets of ordered pairs; the empty
// graph included).
inline std::vector<directed_graph> all_directed(int max_vertices, int max_edges) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < max_vertices; ++a)
        for (int b = 0; b < max_vertices; ++b) pairs.push_back({a, b});
    std::vector<directed_graph> out;
    std::vector<int> chosen;  // ascending pair indices (with repetition)
    std::function<void(int)> rec = [&](int from) {
        std::vector<directed_edge> es;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            es.push_back({static_cast<int>(i), pairs[chosen[i]].first, pairs[chosen[i]].second});
        out.push_back(directed_graph(es));
        if (static_cast<int>(chosen.size()) == max_edges) return;
        for (int p = from; p < static_cast<int>(pairs.size()); ++p) {
            chosen.push_back(p);
            rec(p);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

// Same enumeration for undirected multigraphs (unordered pairs a <= b).
inline std::vector<undirected_graph> all_undirected(int max_vertices, int max_edges) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < max_vertices; ++a)
        for (int b = a; b < max_vertices; ++b) pairs.push_back({a, b});
    std::vector<undirected_graph> out;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
        std::vector<undirected_edge> es;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            es.push_back({static_cast<int>(i), pairs[chosen[i]].first, pairs[chosen[i]].second});
        out.push_back(undirected_graph(es));
        if (static_cast<int>(chosen.size()) == max_edges) return;
        for (int p = from; p < static_cast<int>(pairs.size()); ++p) {
            chosen.push_back(p);
            rec(p);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

inline directed_graph random_directed(std::mt19937& rng, int max_vertices, int num_edges) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<directed_edge> es;
    for (int i = 0; i < num_edges; ++i) es.push_back({i, pick(rng), pick(rng)});
    return directed_graph(es);
}

inline undirected_graph random_undirected(std::mt19937& rng, int max_vertices, int num_edges) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<undirected_edge> es;
    for (int i = 0; i < num_edges; ++i) es.push_back({i, pick(rng), pick(rng)});
    return undirected_graph(es);
}

}  // namespace corpus
