#include "mtt/tree_weight.hpp"

#include <numeric>

#include "mtt/errors.hpp"
#include "mtt/matrix.hpp"

namespace mtt {

WeightedMultigraph::WeightedMultigraph(int n) : n_(n)
{
    if (n < 1) throw InputError("multigraph needs n >= 1");
}

WeightedMultigraph::WeightedMultigraph(const WeightedGraph& g) : n_(g.n())
{
    for (const auto& [e, w] : g.edges()) edges_.push_back({e.first, e.second, w});
}

std::size_t WeightedMultigraph::add_edge(Vertex u, Vertex v, const Rational& w)
{
    if (u < 1 || u > n_ || v < 1 || v > n_) throw InputError("multigraph vertex out of range");
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    if (w.sign() < 0) throw InputError("negative edge weight " + w.str());
    edges_.push_back({u, v, w});
    return edges_.size() - 1;
}

WeightedGraph WeightedMultigraph::collapse() const
{
    WeightedGraph g(n_);
    for (const auto& e : edges_) g.set_weight(e.u, e.v, g.weight(e.u, e.v) + e.w);
    return g;
}

Rational tree_weight_kirchhoff(const WeightedGraph& g, std::size_t minor_index)
{
    return determinant(delete_row_col(laplacian(g), minor_index));
}

Rational tree_weight_kirchhoff(const WeightedMultigraph& g, std::size_t minor_index)
{
    return tree_weight_kirchhoff(g.collapse(), minor_index);
}

namespace {

struct Arc {
    int a;
    int b;
    const Rational* w;
};

bool connected(int k, const std::vector<Arc>& arcs)
{
    std::vector<int> parent(static_cast<std::size_t>(k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = k;
    for (const Arc& e : arcs) {
        const int ra = find(e.a);
        const int rb = find(e.b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

// Vertices are 0..k-1. Contraction keeps parallel arcs distinct and drops loops.
Rational deletion_contraction(int k, std::vector<Arc> arcs)
{
    if (k == 1) return Rational(1);
    if (arcs.size() < static_cast<std::size_t>(k - 1) || !connected(k, arcs)) return Rational(0);
    if (arcs.size() == static_cast<std::size_t>(k - 1)) {
        Rational product(1);
        for (const Arc& e : arcs) product *= *e.w;
        return product;
    }

    const Arc pick = arcs.back();
    arcs.pop_back();

    std::vector<Arc> contracted;
    contracted.reserve(arcs.size());
    const int last = k - 1;
    auto relabel = [&](int x) {
        if (x == pick.b) x = pick.a;
        return x == last ? pick.b : x;
    };
    for (const Arc& e : arcs) {
        const int a = relabel(e.a);
        const int b = relabel(e.b);
        if (a != b) contracted.push_back({a, b, e.w});
    }

    Rational total = deletion_contraction(k, std::move(arcs));
    total += *pick.w * deletion_contraction(k - 1, std::move(contracted));
    return total;
}

Rational enumerate_edges(int n, const std::vector<WeightedMultigraph::Edge>& edges, std::size_t cap)
{
    std::vector<Arc> arcs;
    for (const auto& e : edges)
        if (!e.w.is_zero()) arcs.push_back({e.u - 1, e.v - 1, &e.w});
    if (arcs.size() > cap)
        throw CapExceeded("tree enumeration: " + std::to_string(arcs.size()) + " nonzero edges exceeds cap " +
                          std::to_string(cap));
    return deletion_contraction(n, std::move(arcs));
}

}  // namespace

Rational tree_weight_enumerate(const WeightedGraph& g, std::size_t cap)
{
    return tree_weight_enumerate(WeightedMultigraph(g), cap);
}

Rational tree_weight_enumerate(const WeightedMultigraph& g, std::size_t cap)
{
    return enumerate_edges(g.n(), g.edges(), cap);
}

WeightedMultigraph split_edge(const WeightedMultigraph& g, std::size_t edge_index, const Rational& w1,
                              const Rational& w2)
{
    if (edge_index >= g.edges().size()) throw InputError("split_edge: no edge with index " + std::to_string(edge_index));
    if (w1.sign() < 0 || w2.sign() < 0) throw InputError("split_edge: negative part");
    const auto& target = g.edges()[edge_index];
    if (w1 + w2 != target.w)
        throw InputError("split_edge: parts " + w1.str() + " + " + w2.str() + " do not sum to " + target.w.str());

    WeightedMultigraph out(g.n());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (i == edge_index) {
            out.add_edge(e.u, e.v, w1);
            out.add_edge(e.u, e.v, w2);
        } else {
            out.add_edge(e.u, e.v, e.w);
        }
    }
    return out;
}

ExpansionResult expand_to_multigraph(const WeightedGraph& g, const Integer& max_scale)
{
    Integer scale = 1;
    for (const auto& [e, w] : g.edges()) scale = lcm(scale, w.denominator());
    if (scale > max_scale)
        throw CapExceeded("expansion scale R = " + scale.get_str() + " exceeds cap " + max_scale.get_str());

    Multigraph m(g.n());
    for (const auto& [e, w] : g.edges()) {
        const Rational copies = w * Rational(scale);
        m.set_multiplicity(e.first, e.second, copies.numerator());
    }
    return {std::move(m), scale, g};
}

Integer count_trees_multigraph(const Multigraph& m)
{
    const Rational count = determinant(delete_row_col(laplacian(m), 1));
    // Integer Laplacian, so the minor is an integer.
    return count.numerator();
}

Rational ok_thomassen_bound(int n, const Integer& k)
{
    if (n < 1) throw InputError("ok_thomassen_bound needs n >= 1");
    if (k < 0) throw InputError("ok_thomassen_bound needs k >= 0");
    return Rational(n) * pow(Rational(k, Integer(2)), static_cast<unsigned>(n - 1));
}

}  // namespace mtt
