#include "mtt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mtt/errors.hpp"

namespace mtt {

VertexPair VertexPair::of(Vertex u, Vertex v)
{
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

WeightedGraph::WeightedGraph(int n) : n_(n)
{
    if (n < 1) throw InputError("graph needs n >= 1, got " + std::to_string(n));
}

void WeightedGraph::check_vertex(Vertex v) const
{
    if (v < 1 || v > n_)
        throw InputError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
}

void WeightedGraph::set_weight(Vertex u, Vertex v, const Rational& w)
{
    check_vertex(u);
    check_vertex(v);
    const VertexPair e = VertexPair::of(u, v);
    if (w.sign() < 0) throw InputError("negative weight " + w.str() + " on edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (w.is_zero())
        edges_.erase(e);
    else
        edges_[e] = w;
}

Rational WeightedGraph::weight(Vertex u, Vertex v) const
{
    if (u == v) return Rational(0);
    const auto it = edges_.find(VertexPair::of(u, v));
    return it == edges_.end() ? Rational(0) : it->second;
}

Rational WeightedGraph::degree(Vertex v) const
{
    check_vertex(v);
    Rational d;
    for (const auto& [e, w] : edges_)
        if (e.first == v || e.second == v) d += w;
    return d;
}

Rational WeightedGraph::total_weight() const
{
    Rational t;
    for (const auto& [e, w] : edges_) t += w;
    return t;
}

Multigraph::Multigraph(int n) : n_(n)
{
    if (n < 1) throw InputError("multigraph needs n >= 1, got " + std::to_string(n));
}

void Multigraph::set_multiplicity(Vertex u, Vertex v, const Integer& count)
{
    if (u < 1 || u > n_ || v < 1 || v > n_) throw InputError("multigraph vertex out of range");
    if (count < 0) throw InputError("negative multiplicity");
    const VertexPair e = VertexPair::of(u, v);
    if (count == 0)
        mult_.erase(e);
    else
        mult_[e] = count;
}

Integer Multigraph::multiplicity(Vertex u, Vertex v) const
{
    const auto it = mult_.find(VertexPair::of(u, v));
    return it == mult_.end() ? Integer(0) : it->second;
}

Integer Multigraph::edge_total() const
{
    Integer t = 0;
    for (const auto& [e, c] : mult_) t += c;
    return t;
}

WeightedGraph Multigraph::as_weighted() const
{
    WeightedGraph g(n_);
    for (const auto& [e, c] : mult_) g.set_weight(e.first, e.second, Rational(c));
    return g;
}

CutSide::CutSide(int n, std::vector<Vertex> members) : n_(n), members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw InputError("cut side is empty");
    if (members_.front() < 1 || members_.back() > n) throw InputError("cut side vertex out of range");
    if (static_cast<int>(members_.size()) == n) throw InputError("cut side is the whole vertex set");
}

bool CutSide::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

CutSide CutSide::complement() const
{
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= n_; ++v)
        if (!contains(v)) rest.push_back(v);
    return CutSide(n_, std::move(rest));
}

RationalMatrix adjacency_matrix(const WeightedGraph& g)
{
    RationalMatrix x(static_cast<std::size_t>(g.n()));
    for (const auto& [e, w] : g.edges()) {
        x(e.first - 1, e.second - 1) = w;
        x(e.second - 1, e.first - 1) = w;
    }
    return x;
}

RationalMatrix laplacian(const WeightedGraph& g)
{
    RationalMatrix l(static_cast<std::size_t>(g.n()));
    for (const auto& [e, w] : g.edges()) {
        const std::size_t i = e.first - 1;
        const std::size_t j = e.second - 1;
        l(i, j) -= w;
        l(j, i) -= w;
        l(i, i) += w;
        l(j, j) += w;
    }
    return l;
}

RationalMatrix laplacian(const Multigraph& m) { return laplacian(m.as_weighted()); }

Rational cut_weight(const WeightedGraph& g, const CutSide& s)
{
    if (s.n() != g.n()) throw InputError("cut side and graph disagree on n");
    Rational total;
    for (const auto& [e, w] : g.edges())
        if (s.contains(e.first) != s.contains(e.second)) total += w;
    return total;
}

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

int require_int(const nlohmann::json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected integer");
    return v.get<int>();
}

}  // namespace

WeightedGraph graph_from_json(const nlohmann::json& doc)
{
    const int n = require_int(doc, "n", "graph");
    if (n < 1) throw ParseError("graph.n: must be >= 1");
    if (!doc.contains("edges") || !doc.at("edges").is_array()) throw ParseError("graph: missing array 'edges'");

    WeightedGraph g(n);
    std::set<VertexPair> seen;
    std::size_t index = 0;
    for (const auto& item : doc.at("edges")) {
        const std::string where = "edges[" + std::to_string(index++) + "]";
        const int u = require_int(item, "u", where);
        const int v = require_int(item, "v", where);
        if (!item.contains("w") || !item.at("w").is_string())
            throw ParseError(where + ".w: expected fraction string");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(where + ": vertex index out of range [1, " + std::to_string(n) + "]");
        if (u == v) throw ParseError(where + ": loop edge at vertex " + std::to_string(u));
        Rational w;
        try {
            w = Rational::parse(item.at("w").get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ".w: " + e.what());
        }
        if (w.sign() < 0) throw ParseError(where + ".w: negative weight " + w.str());
        if (!seen.insert(VertexPair::of(u, v)).second) throw ParseError(where + ": duplicate pair");
        g.set_weight(u, v, w);
    }
    return g;
}

WeightedGraph parse_graph(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte));
    }
    return graph_from_json(doc);
}

nlohmann::json graph_to_json(const WeightedGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [e, w] : g.edges()) edges.push_back({{"u", e.first}, {"v", e.second}, {"w", w.str()}});
    return {{"n", g.n()}, {"edges", std::move(edges)}};
}

std::string serialize_graph(const WeightedGraph& g) { return graph_to_json(g).dump(); }

WeightedGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

WeightedGraph cycle_graph(int n, const Rational& w)
{
    if (n < 3) throw InputError("cycle needs n >= 3");
    WeightedGraph g(n);
    for (Vertex v = 1; v <= n; ++v) g.set_weight(v, v % n + 1, w);
    return g;
}

WeightedGraph complete_graph(int n, const Rational& w)
{
    WeightedGraph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) g.set_weight(u, v, w);
    return g;
}

WeightedGraph path_graph(int n, const Rational& w)
{
    WeightedGraph g(n);
    for (Vertex v = 1; v < n; ++v) g.set_weight(v, v + 1, w);
    return g;
}

WeightedGraph prism_half_point()
{
    const Rational half(Integer(1), Integer(2));
    WeightedGraph g(6);
    for (const auto& [u, v] : {std::pair{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}) g.set_weight(u, v, half);
    for (const auto& [u, v] : {std::pair{1, 4}, {2, 5}, {3, 6}}) g.set_weight(u, v, 1);
    return g;
}

WeightedGraph two_triangles()
{
    WeightedGraph g(6);
    for (const auto& [u, v] : {std::pair{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}) g.set_weight(u, v, 1);
    return g;
}

WeightedGraph relabel(const WeightedGraph& g, const std::vector<Vertex>& perm)
{
    if (static_cast<int>(perm.size()) != g.n()) throw InputError("permutation length does not match n");
    WeightedGraph out(g.n());
    for (const auto& [e, w] : g.edges()) out.set_weight(perm[e.first - 1], perm[e.second - 1], w);
    return out;
}

}  // namespace mtt
