#pragma once

#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclepack/graph.hpp"
#include "cyclepack/guards.hpp"

namespace cyclepack {

struct parsed_directed {
    directed_graph graph;
    std::vector<std::string> warnings;
};

struct parsed_undirected {
    undirected_graph graph;
    std::vector<std::string> warnings;
};

namespace detail {

struct raw_graph {
    // Edges as (tail name, head name, optional label), ids implied by order.
    std::vector<std::array<std::string, 3>> edges;
    std::vector<std::string> declared;  // node statements (DOT only)
    bool directed = true;
};

inline std::map<std::string, vertex_id> name_table(const raw_graph& raw) {
    std::map<std::string, vertex_id> ids;
    vertex_id next = 0;
    auto intern = [&](const std::string& s) {
        if (!ids.count(s)) ids[s] = next++;
    };
    for (const auto& e : raw.edges) {
        intern(e[0]);
        intern(e[1]);
    }
    for (const auto& v : raw.declared) intern(v);
    return ids;
}

inline std::vector<std::string> isolated_warnings(const raw_graph& raw) {
    std::vector<std::string> w;
    std::set<std::string> used;
    for (const auto& e : raw.edges) {
        used.insert(e[0]);
        used.insert(e[1]);
    }
    std::set<std::string> seen;
    for (const auto& v : raw.declared)
        if (!used.count(v) && seen.insert(v).second)
            w.push_back("dropping isolated vertex '" + v + "'");
    return w;
}

inline parsed_directed finish_directed(const raw_graph& raw) {
    auto ids = name_table(raw);
    std::vector<directed_edge> es;
    std::map<edge_id, std::string> labels;
    std::map<vertex_id, std::string> names;
    for (auto& [name, v] : ids) names[v] = name;
    edge_id next = 0;
    for (const auto& e : raw.edges) {
        es.push_back({next, ids.at(e[0]), ids.at(e[1])});
        if (!e[2].empty()) labels[next] = e[2];
        ++next;
    }
    return {directed_graph(es, names, labels), isolated_warnings(raw)};
}

inline parsed_undirected finish_undirected(const raw_graph& raw) {
    auto ids = name_table(raw);
    std::vector<undirected_edge> es;
    std::map<edge_id, std::string> labels;
    std::map<vertex_id, std::string> names;
    for (auto& [name, v] : ids) names[v] = name;
    edge_id next = 0;
    for (const auto& e : raw.edges) {
        es.push_back({next, ids.at(e[0]), ids.at(e[1])});
        if (!e[2].empty()) labels[next] = e[2];
        ++next;
    }
    return {undirected_graph(es, names, labels), isolated_warnings(raw)};
}

// Split into whitespace-separated tokens after removing a # comment.
inline std::vector<std::string> edge_list_tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

inline raw_graph parse_edge_list_raw(const std::string& text) {
    raw_graph raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = edge_list_tokens(line);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3)
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected 'TAIL HEAD [LABEL]', got " +
                              std::to_string(toks.size()) + " tokens");
        raw.edges.push_back({toks[0], toks[1], toks.size() == 3 ? toks[2] : ""});
    }
    return raw;
}

// --- DOT subset -----------------------------------------------------------
// Accepted grammar:  ('digraph'|'graph') [NAME] '{' stmt* '}'
// where stmt is  ID (EDGEOP ID)* terminator  |  ID terminator ,
// EDGEOP is '->' in digraphs and '--' in graphs, terminator is ';' or a line
// break.  Identifiers are bare words or double-quoted strings; comments are
// '//', '#', or '/* */'.  Attributes, subgraphs, and ports are rejected.

struct dot_token {
    enum kind { ident, arrow, undirected, lbrace, rbrace, semi, eol, eof } k;
    std::string text;
    int line;
};

inline std::vector<dot_token> dot_tokens(const std::string& text) {
    std::vector<dot_token> out;
    int line = 1;
    std::size_t i = 0;
    auto push = [&](dot_token::kind k, std::string s = "") { out.push_back({k, std::move(s), line}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            push(dot_token::eol);
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
            i += 2;
            while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) {
                if (text[i] == '\n') ++line;
                ++i;
            }
            if (i + 1 >= text.size())
                throw parse_error("line " + std::to_string(line) + ": unterminated comment");
            i += 2;
        } else if (c == '{') {
            push(dot_token::lbrace);
            ++i;
        } else if (c == '}') {
            push(dot_token::rbrace);
            ++i;
        } else if (c == ';') {
            push(dot_token::semi);
            ++i;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(dot_token::arrow);
            i += 2;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            push(dot_token::undirected);
            i += 2;
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
            if (j >= text.size() || text[j] != '"')
                throw parse_error("line " + std::to_string(line) + ": unterminated string");
            push(dot_token::ident, text.substr(i + 1, j - i - 1));
            i = j + 1;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_' || text[j] == '.'))
                ++j;
            push(dot_token::ident, text.substr(i, j - i));
            i = j;
        } else {
            throw parse_error("line " + std::to_string(line) + ": unsupported character '" +
                              std::string(1, c) + "'");
        }
    }
    push(dot_token::eof);
    return out;
}

struct dot_graph {
    bool directed;
    raw_graph raw;
};

inline dot_graph parse_dot_raw(const std::string& text) {
    auto toks = dot_tokens(text);
    std::size_t i = 0;
    auto skip_eol = [&] {
        while (toks[i].k == dot_token::eol) ++i;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw parse_error("line " + std::to_string(toks[i].line) + ": " + msg);
    };
    skip_eol();
    if (toks[i].k != dot_token::ident || (toks[i].text != "digraph" && toks[i].text != "graph"))
        fail("expected 'digraph' or 'graph'");
    dot_graph dg;
    dg.directed = toks[i].text == "digraph";
    dg.raw.directed = dg.directed;
    ++i;
    skip_eol();
    if (toks[i].k == dot_token::ident) ++i;  // optional graph name
    skip_eol();
    if (toks[i].k != dot_token::lbrace) fail("expected '{'");
    ++i;
    while (true) {
        while (toks[i].k == dot_token::eol || toks[i].k == dot_token::semi) ++i;
        if (toks[i].k == dot_token::rbrace) break;
        if (toks[i].k == dot_token::eof) fail("missing '}'");
        if (toks[i].k != dot_token::ident) fail("expected node or edge statement");
        std::vector<std::string> chain{toks[i].text};
        ++i;
        while (toks[i].k == dot_token::arrow || toks[i].k == dot_token::undirected) {
            bool arrow = toks[i].k == dot_token::arrow;
            if (arrow != dg.directed)
                fail(dg.directed ? "'--' is not valid in a digraph" : "'->' is not valid in a graph");
            ++i;
            skip_eol();
            if (toks[i].k != dot_token::ident) fail("expected vertex after edge operator");
            chain.push_back(toks[i].text);
            ++i;
        }
        if (toks[i].k != dot_token::semi && toks[i].k != dot_token::eol &&
            toks[i].k != dot_token::rbrace)
            fail("expected ';' or end of line after statement");
        if (chain.size() == 1)
            dg.raw.declared.push_back(chain[0]);
        else
            for (std::size_t k = 0; k + 1 < chain.size(); ++k)
                dg.raw.edges.push_back({chain[k], chain[k + 1], ""});
    }
    ++i;
    while (toks[i].k == dot_token::eol) ++i;
    if (toks[i].k != dot_token::eof) fail("trailing content after '}'");
    return dg;
}

}  // namespace detail

inline parsed_directed parse_edge_list(const std::string& text) {
    return detail::finish_directed(detail::parse_edge_list_raw(text));
}

inline parsed_undirected parse_edge_list_undirected(const std::string& text) {
    return detail::finish_undirected(detail::parse_edge_list_raw(text));
}

inline parsed_directed parse_dot_directed(const std::string& text) {
    auto dg = detail::parse_dot_raw(text);
    if (!dg.directed) throw parse_error("expected a digraph, found an undirected graph");
    return detail::finish_directed(dg.raw);
}

inline parsed_undirected parse_dot_undirected(const std::string& text) {
    auto dg = detail::parse_dot_raw(text);
    if (dg.directed) throw parse_error("expected an undirected graph, found a digraph");
    return detail::finish_undirected(dg.raw);
}

inline bool has_dot_extension(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return false;
    std::string ext = path.substr(dot + 1);
    return ext == "dot" || ext == "gv";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Format is sniffed by extension: .dot/.gv parse as DOT, all else edge list.
inline parsed_directed load_directed(const std::string& path) {
    std::string text = read_file(path);
    return has_dot_extension(path) ? parse_dot_directed(text) : parse_edge_list(text);
}

inline parsed_undirected load_undirected(const std::string& path) {
    std::string text = read_file(path);
    return has_dot_extension(path) ? parse_dot_undirected(text) : parse_edge_list_undirected(text);
}

// Canonical JSON: {"vertices": [...], "edges": [{"id","tail","head","label"?}]}
// with vertices ascending and edges ascending by id.  Optional display names
// ride along in "vertex_names".
inline nlohmann::json to_json(const directed_graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        nlohmann::json je{{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
        auto it = g.edge_labels().find(e.id);
        if (it != g.edge_labels().end()) je["label"] = it->second;
        j["edges"].push_back(je);
    }
    if (!g.vertex_names().empty()) {
        nlohmann::json names;
        for (const auto& [v, n] : g.vertex_names()) names[std::to_string(v)] = n;
        j["vertex_names"] = names;
    }
    return j;
}

inline nlohmann::json to_json(const undirected_graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        nlohmann::json je{{"id", e.id}, {"ends", {e.a, e.b}}};
        auto it = g.edge_labels().find(e.id);
        if (it != g.edge_labels().end()) je["label"] = it->second;
        j["edges"].push_back(je);
    }
    if (!g.vertex_names().empty()) {
        nlohmann::json names;
        for (const auto& [v, n] : g.vertex_names()) names[std::to_string(v)] = n;
        j["vertex_names"] = names;
    }
    return j;
}

inline directed_graph directed_from_json(const nlohmann::json& j) {
    try {
        std::vector<directed_edge> es;
        std::map<edge_id, std::string> labels;
        std::map<vertex_id, std::string> names;
        for (const auto& je : j.at("edges")) {
            directed_edge e{je.at("id").get<int>(), je.at("tail").get<int>(),
                            je.at("head").get<int>()};
            if (je.contains("label")) labels[e.id] = je.at("label").get<std::string>();
            es.push_back(e);
        }
        if (j.contains("vertex_names"))
            for (auto it = j["vertex_names"].begin(); it != j["vertex_names"].end(); ++it)
                names[std::stoi(it.key())] = it.value().get<std::string>();
        return directed_graph(es, names, labels);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph json: ") + e.what());
    }
}

inline undirected_graph undirected_from_json(const nlohmann::json& j) {
    try {
        std::vector<undirected_edge> es;
        std::map<edge_id, std::string> labels;
        std::map<vertex_id, std::string> names;
        for (const auto& je : j.at("edges")) {
            undirected_edge e{je.at("id").get<int>(), je.at("ends").at(0).get<int>(),
                              je.at("ends").at(1).get<int>()};
            if (je.contains("label")) labels[e.id] = je.at("label").get<std::string>();
            es.push_back(e);
        }
        if (j.contains("vertex_names"))
            for (auto it = j["vertex_names"].begin(); it != j["vertex_names"].end(); ++it)
                names[std::stoi(it.key())] = it.value().get<std::string>();
        return undirected_graph(es, names, labels);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph json: ") + e.what());
    }
}

}  // namespace cyclepack
