#include "mtt/subtour_lp.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "mtt/connectivity.hpp"
#include "mtt/errors.hpp"

namespace mtt {

EdgeIndex::EdgeIndex(int n) : n_(n)
{
    if (n < 1) throw InputError("EdgeIndex needs n >= 1");
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) pairs_.push_back({u, v});
}

std::size_t EdgeIndex::index(Vertex u, Vertex v) const
{
    if (u < 1 || v < 1 || u > n_ || v > n_) throw InputError("edge endpoint out of range");
    const VertexPair p = VertexPair::of(u, v);
    const auto a = static_cast<std::size_t>(p.first);
    const auto b = static_cast<std::size_t>(p.second);
    const auto n = static_cast<std::size_t>(n_);
    return (a - 1) * (2 * n - a) / 2 + (b - a - 1);
}

CostVector parse_costs(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer())
        throw ParseError("instance: missing integer field 'n'");
    const int n = doc.at("n").get<int>();
    if (n < 3) throw ParseError("instance.n: must be >= 3");
    if (!doc.contains("costs") || !doc.at("costs").is_array()) throw ParseError("instance: missing array 'costs'");

    const EdgeIndex index(n);
    CostVector out{n, std::vector<Rational>(index.size())};
    std::vector<bool> seen(index.size(), false);
    std::size_t k = 0;
    for (const auto& item : doc.at("costs")) {
        const std::string where = "costs[" + std::to_string(k++) + "]";
        if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("c") ||
            !item.at("u").is_number_integer() || !item.at("v").is_number_integer() || !item.at("c").is_string())
            throw ParseError(where + ": expected {\"u\": int, \"v\": int, \"c\": fraction}");
        const int u = item.at("u").get<int>();
        const int v = item.at("v").get<int>();
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(where + ": vertex index out of range");
        if (u == v) throw ParseError(where + ": loop edge");
        const std::size_t e = index.index(u, v);
        if (seen[e]) throw ParseError(where + ": duplicate pair");
        seen[e] = true;
        try {
            out.costs[e] = Rational::parse(item.at("c").get<std::string>());
        } catch (const ParseError& err) {
            throw ParseError(where + ".c: " + err.what());
        }
    }
    for (std::size_t e = 0; e < index.size(); ++e)
        if (!seen[e]) {
            const auto p = index.pair(e);
            throw ParseError("instance: missing cost for pair {" + std::to_string(p.first) + "," +
                             std::to_string(p.second) + "}");
        }
    return out;
}

CostVector read_costs_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_costs(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

nlohmann::json costs_to_json(const CostVector& costs)
{
    const EdgeIndex index(costs.n);
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t e = 0; e < index.size(); ++e) {
        const auto p = index.pair(e);
        list.push_back({{"u", p.first}, {"v", p.second}, {"c", costs.costs[e].str()}});
    }
    return {{"n", costs.n}, {"costs", std::move(list)}};
}

CostVector random_instance(int n, std::uint64_t seed)
{
    if (n < 3) throw InputError("random_instance needs n >= 3");
    // Reduce the raw engine output directly; distribution objects are not
    // reproducible across standard libraries.
    std::mt19937_64 rng(seed);
    const EdgeIndex index(n);
    CostVector out{n, {}};
    out.costs.reserve(index.size());
    for (std::size_t e = 0; e < index.size(); ++e)
        out.costs.emplace_back(static_cast<std::int64_t>(1 + rng() % 1000));
    return out;
}

LpModel degree_model(const CostVector& costs)
{
    const EdgeIndex index(costs.n);
    if (costs.costs.size() != index.size()) throw InputError("cost vector length does not match n(n-1)/2");
    LpModel model;
    for (std::size_t e = 0; e < index.size(); ++e) model.add_variable(costs.costs[e], Rational(0), Rational(1));
    for (Vertex v = 1; v <= costs.n; ++v) {
        std::vector<Rational> row(index.size());
        for (Vertex u = 1; u <= costs.n; ++u)
            if (u != v) row[index.index(u, v)] = Rational(1);
        model.add_constraint(std::move(row), Relation::Equal, Rational(2));
    }
    return model;
}

void add_subtour_cut(LpModel& model, const EdgeIndex& edges, const CutSide& side)
{
    std::vector<Rational> row(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto p = edges.pair(e);
        if (side.contains(p.first) != side.contains(p.second)) row[e] = Rational(1);
    }
    model.add_constraint(std::move(row), Relation::GreaterEqual, Rational(2));
}

WeightedGraph point_to_graph(int n, const std::vector<Rational>& x)
{
    const EdgeIndex index(n);
    if (x.size() != index.size()) throw InputError("point length does not match n(n-1)/2");
    WeightedGraph g(n);
    for (std::size_t e = 0; e < index.size(); ++e) {
        const auto p = index.pair(e);
        g.set_weight(p.first, p.second, x[e]);
    }
    return g;
}

std::vector<Rational> graph_to_point(const WeightedGraph& g)
{
    const EdgeIndex index(g.n());
    std::vector<Rational> x(index.size());
    for (const auto& [e, w] : g.edges()) x[index.index(e.first, e.second)] = w;
    return x;
}

SubtourSolution solve_subtour_lp(const CostVector& costs, std::size_t cut_cap)
{
    if (costs.n < 3) throw InputError("subtour LP needs n >= 3");
    const EdgeIndex index(costs.n);
    SubtourSolution out{{}, 0, {}, degree_model(costs)};
    for (;;) {
        out.point = simplex_solve(out.final_model);
        const WeightedGraph support = point_to_graph(costs.n, out.point.x);
        MinCutResult cut = global_min_cut(support);
        if (cut.value >= Rational(2)) return out;
        if (out.cuts_added == cut_cap)
            throw CapExceeded("subtour LP: cut cap " + std::to_string(cut_cap) + " reached");
        add_subtour_cut(out.final_model, index, cut.side);
        out.cuts.push_back(std::move(cut.side));
        ++out.cuts_added;
    }
}

std::vector<Rational> convex_combine(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     const Rational& t)
{
    if (a.size() != b.size()) throw InputError("convex_combine: dimension mismatch");
    if (t.sign() < 0 || t > Rational(1)) throw InputError("convex_combine: t = " + t.str() + " outside [0, 1]");
    const Rational s = Rational(1) - t;
    std::vector<Rational> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = t * a[k] + s * b[k];
    return out;
}

WeightedGraph convex_combine(const WeightedGraph& a, const WeightedGraph& b, const Rational& t)
{
    if (a.n() != b.n()) throw InputError("convex_combine: vertex counts differ");
    if (a.n() < 2) return a;
    return point_to_graph(a.n(), convex_combine(graph_to_point(a), graph_to_point(b), t));
}

}  // namespace mtt
