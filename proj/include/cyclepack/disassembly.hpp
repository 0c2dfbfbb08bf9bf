#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cyclepack/graph.hpp"
#include "cyclepack/guards.hpp"

namespace cyclepack {

// One way to disassemble the graph: at every vertex the inward edges are
// paired injectively with outward edges (the smaller side is exhausted), so
// the induced successor map splits the edge set into directed paths and
// directed cycles.
struct disassembly {
    std::map<vertex_id, std::vector<std::pair<edge_id, edge_id>>> pairs;  // (in, out)
    std::vector<std::vector<edge_id>> cycles;  // canonical: rotated to min id
    std::size_t path_count = 0;                // maximal chains that do not close

    std::size_t cycle_count() const { return cycles.size(); }
};

namespace detail {

// All injections pairing the smaller of (ins, outs) fully into the other,
// emitted as (in, out) pairs sorted by in-edge.  Deterministic order.
inline std::vector<std::vector<std::pair<edge_id, edge_id>>> vertex_pairings(
    const std::vector<edge_id>& ins, const std::vector<edge_id>& outs) {
    std::vector<std::vector<std::pair<edge_id, edge_id>>> result;
    const bool ins_smaller = ins.size() <= outs.size();
    const auto& small = ins_smaller ? ins : outs;
    const auto& large = ins_smaller ? outs : ins;

    std::vector<std::pair<edge_id, edge_id>> current;
    std::vector<bool> used(large.size(), false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == small.size()) {
            auto sorted = current;
            std::sort(sorted.begin(), sorted.end());
            result.push_back(sorted);
            return;
        }
        for (std::size_t j = 0; j < large.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            if (ins_smaller)
                current.emplace_back(small[i], large[j]);
            else
                current.emplace_back(large[j], small[i]);
            self(self, i + 1);
            current.pop_back();
            used[j] = false;
        }
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace detail

// Every disassembly of g, in a deterministic order.  The product of the
// per-vertex pairing counts is guarded by lim.max_disassemblies.
inline std::vector<disassembly> enumerate_disassemblies(const directed_graph& g,
                                                        const limits& lim = {}) {
    std::vector<vertex_id> sites;
    std::vector<std::vector<std::vector<std::pair<edge_id, edge_id>>>> options;
    std::uint64_t total = 1;
    for (vertex_id v : g.vertices()) {
        auto opts = detail::vertex_pairings(g.in_edges(v), g.out_edges(v));
        if (opts.empty()) throw internal_error("a vertex admits no pairing");
        if (total > lim.max_disassemblies / opts.size())
            throw guard_error("max-disassemblies", lim.max_disassemblies);
        total *= opts.size();
        sites.push_back(v);
        options.push_back(std::move(opts));
    }

    std::vector<disassembly> out;
    std::vector<std::size_t> choice(sites.size(), 0);
    while (true) {
        disassembly d;
        std::map<edge_id, edge_id> succ;
        std::set<edge_id> has_pred;
        for (std::size_t s = 0; s < sites.size(); ++s) {
            const auto& pick = options[s][choice[s]];
            if (!pick.empty()) d.pairs[sites[s]] = pick;
            for (const auto& [in, outgoing] : pick) {
                if (g.edge(in).head != sites[s] || g.edge(outgoing).tail != sites[s])
                    throw internal_error("pairing uses a non-incident edge");
                if (!succ.emplace(in, outgoing).second)
                    throw internal_error("an edge received two successors");
                if (!has_pred.insert(outgoing).second)
                    throw internal_error("an edge received two predecessors");
            }
        }

        // Walk the successor map: chains first, the rest are cycles.
        std::set<edge_id> visited;
        for (const auto& e : g.edges()) {
            if (has_pred.count(e.id)) continue;  // not a chain head
            for (edge_id cur = e.id;;) {
                visited.insert(cur);
                auto it = succ.find(cur);
                if (it == succ.end()) break;
                cur = it->second;
            }
            ++d.path_count;
        }
        for (const auto& e : g.edges()) {
            if (visited.count(e.id)) continue;
            std::vector<edge_id> cyc;
            edge_id cur = e.id;
            do {
                visited.insert(cur);
                cyc.push_back(cur);
                auto it = succ.find(cur);
                if (it == succ.end()) throw internal_error("a cycle chain broke mid-walk");
                cur = it->second;
            } while (cur != e.id);
            auto smallest = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), smallest, cyc.end());
            d.cycles.push_back(cyc);
        }
        if (visited.size() != g.edges().size())
            throw internal_error("disassembly did not partition the edges");
        std::sort(d.cycles.begin(), d.cycles.end());
        out.push_back(std::move(d));

        std::size_t s = 0;
        while (s < choice.size() && ++choice[s] == options[s].size()) {
            choice[s] = 0;
            ++s;
        }
        if (s == choice.size()) break;
    }
    return out;
}

}  // namespace cyclepack
