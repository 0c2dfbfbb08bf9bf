#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclepack/graph.hpp"
#include "cyclepack/graph_io.hpp"
#include "cyclepack/guards.hpp"

namespace cyclepack {

// Exact nonnegative rational from "p/q", an integer, or a finite decimal.
inline mpq_class parse_rational(const std::string& tok) {
    auto bad = [&] { return parse_error("bad rational '" + tok + "'"); };
    if (tok.empty()) throw bad();
    std::string s = tok;
    auto slash = s.find('/');
    auto dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            if (dot != std::string::npos) throw bad();
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw bad();
            q.canonicalize();
            return q;
        }
        if (dot != std::string::npos) {
            std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
            if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos) throw bad();
            bool neg = !ip.empty() && ip[0] == '-';
            if (neg) ip = ip.substr(1);
            if (ip.empty()) ip = "0";
            if (ip.find_first_not_of("0123456789") != std::string::npos) throw bad();
            mpz_class num(ip + fp, 10);
            mpz_class den = 1;
            for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
            mpq_class q(num, den);
            q.canonicalize();
            if (neg) q = -q;
            return q;
        }
        mpq_class q(s, 10);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

inline std::string rational_string(const mpq_class& q) {
    std::ostringstream ss;
    ss << q;
    return ss.str();
}

// Flow network: a directed multigraph with a nonnegative rational capacity
// per edge plus distinguished source and sink.
struct flow_network {
    directed_graph graph;
    std::map<edge_id, mpq_class> capacity;
    vertex_id source = -1;
    vertex_id sink = -1;
};

// .flow format: '#' comments and blank lines ignored; the first data line is
// 'SOURCE SINK'; every further line is 'TAIL HEAD CAPACITY'.
inline flow_network parse_flow(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_ends = false;
    std::string source_name, sink_name;
    std::vector<std::array<std::string, 3>> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::edge_list_tokens(line);
        if (toks.empty()) continue;
        if (!have_ends) {
            if (toks.size() != 2)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected 'SOURCE SINK' header line");
            source_name = toks[0];
            sink_name = toks[1];
            have_ends = true;
            continue;
        }
        if (toks.size() != 3)
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected 'TAIL HEAD CAPACITY'");
        arcs.push_back({toks[0], toks[1], toks[2]});
    }
    if (!have_ends) throw parse_error("missing 'SOURCE SINK' header line");
    if (source_name == sink_name) throw parse_error("source and sink must differ");

    std::map<std::string, vertex_id> ids;
    vertex_id next = 0;
    auto intern = [&](const std::string& s) {
        if (!ids.count(s)) ids[s] = next++;
        return ids[s];
    };
    intern(source_name);
    intern(sink_name);
    flow_network net;
    std::vector<directed_edge> es;
    edge_id eid = 0;
    for (const auto& a : arcs) {
        mpq_class cap = parse_rational(a[2]);
        if (cap < 0) throw parse_error("negative capacity '" + a[2] + "'");
        es.push_back({eid, intern(a[0]), intern(a[1])});
        net.capacity[eid] = cap;
        ++eid;
    }
    std::map<vertex_id, std::string> names;
    for (auto& [name, v] : ids) names[v] = name;
    net.source = ids.at(source_name);
    net.sink = ids.at(sink_name);
    net.graph = directed_graph(es, names, {});
    if (!net.graph.has_vertex(net.source) || !net.graph.has_vertex(net.sink))
        throw parse_error("source and sink must each touch at least one arc");
    for (auto it = net.capacity.begin(); it != net.capacity.end();)
        it = net.graph.has_edge(it->first) ? std::next(it) : net.capacity.erase(it);
    return net;
}

// Exact max-flow value (Edmonds-Karp: BFS augmenting paths, rational
// arithmetic throughout, arcs explored in ascending id order).
inline mpq_class max_flow(const flow_network& net) {
    const auto& g = net.graph;
    std::map<edge_id, mpq_class> flow;
    for (const auto& [e, c] : net.capacity) flow[e] = 0;

    while (true) {
        // BFS on the residual graph; parent edge + direction per vertex.
        std::map<vertex_id, std::pair<edge_id, bool>> parent;  // bool: forward
        std::vector<vertex_id> queue{net.source};
        std::set<vertex_id> seen{net.source};
        for (std::size_t qi = 0; qi < queue.size() && !seen.count(net.sink); ++qi) {
            vertex_id v = queue[qi];
            for (const auto& e : g.edges()) {
                if (e.tail == v && !seen.count(e.head) && flow[e.id] < net.capacity.at(e.id)) {
                    parent[e.head] = {e.id, true};
                    seen.insert(e.head);
                    queue.push_back(e.head);
                }
                if (e.head == v && !seen.count(e.tail) && flow[e.id] > 0) {
                    parent[e.tail] = {e.id, false};
                    seen.insert(e.tail);
                    queue.push_back(e.tail);
                }
            }
        }
        if (!seen.count(net.sink)) break;
        // Bottleneck along the path.
        mpq_class bottleneck;
        bool first = true;
        for (vertex_id v = net.sink; v != net.source;) {
            auto [e, fwd] = parent.at(v);
            mpq_class room = fwd ? mpq_class(net.capacity.at(e) - flow[e]) : flow[e];
            if (first || room < bottleneck) bottleneck = room;
            first = false;
            v = fwd ? g.edge(e).tail : g.edge(e).head;
        }
        for (vertex_id v = net.sink; v != net.source;) {
            auto [e, fwd] = parent.at(v);
            flow[e] += fwd ? bottleneck : -bottleneck;
            v = fwd ? g.edge(e).tail : g.edge(e).head;
        }
    }
    mpq_class value = 0;
    for (const auto& e : g.edges()) {
        if (e.tail == net.source) value += flow[e.id];
        if (e.head == net.source) value -= flow[e.id];
    }
    return value;
}

// The capacity-ceiling multigraph: each arc becomes ceil(capacity) parallel
// copies.  Fresh edge ids run 0,1,... over arcs in ascending id order;
// `from_arc` records which arc every copy came from.
struct flow_graph_result {
    directed_graph graph;
    std::map<edge_id, edge_id> from_arc;
};

inline flow_graph_result flow_to_graph(const flow_network& net) {
    flow_graph_result r;
    std::vector<directed_edge> es;
    edge_id next = 0;
    for (const auto& e : net.graph.edges()) {
        const mpq_class& c = net.capacity.at(e.id);
        mpz_class copies;
        mpz_cdiv_q(copies.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
        if (copies < 0) copies = 0;
        for (mpz_class k = 0; k < copies; ++k) {
            es.push_back({next, e.tail, e.head});
            r.from_arc[next] = e.id;
            ++next;
        }
    }
    r.graph = directed_graph(es, net.graph.vertex_names(), {});
    return r;
}

}  // namespace cyclepack
