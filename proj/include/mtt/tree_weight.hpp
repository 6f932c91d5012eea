#ifndef MTT_TREE_WEIGHT_HPP
#define MTT_TREE_WEIGHT_HPP

#include <cstddef>
#include <vector>

#include "mtt/graph.hpp"
#include "mtt/rational.hpp"

namespace mtt {

inline constexpr std::size_t kDefaultEnumerationCap = 20;
inline constexpr long kDefaultExpansionCap = 1'000'000;

/// Weighted loopless multigraph as an edge list; parallel edges are kept distinct.
class WeightedMultigraph {
public:
    struct Edge {
        Vertex u;
        Vertex v;
        Rational w;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    explicit WeightedMultigraph(int n);
    explicit WeightedMultigraph(const WeightedGraph& g);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Appends an edge and returns its index. Throws InputError on loops,
    /// out-of-range vertices, or negative weights.
    std::size_t add_edge(Vertex u, Vertex v, const Rational& w);

    /// Simple graph with parallel weights summed.
    [[nodiscard]] WeightedGraph collapse() const;

    friend bool operator==(const WeightedMultigraph&, const WeightedMultigraph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Sum over spanning trees of the product of edge weights, as the principal
/// minor det(L_{-i}). `minor_index` is 1-based; the value does not depend on it.
Rational tree_weight_kirchhoff(const WeightedGraph& g, std::size_t minor_index = 1);
Rational tree_weight_kirchhoff(const WeightedMultigraph& g, std::size_t minor_index = 1);

/// The same aggregate by deletion-contraction over the nonzero edges.
/// Every nonzero leaf of the recursion is one spanning tree, so the work is
/// proportional to the tree count. Throws CapExceeded when the graph has
/// more than `cap` nonzero edges.
Rational tree_weight_enumerate(const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap);
Rational tree_weight_enumerate(const WeightedMultigraph& g, std::size_t cap = kDefaultEnumerationCap);

/// Replaces edge `edge_index` by two parallel copies of weight w1 and w2.
/// Throws InputError when the index is invalid, a part is negative, or
/// w1 + w2 differs from the edge weight.
WeightedMultigraph split_edge(const WeightedMultigraph& g, std::size_t edge_index, const Rational& w1,
                              const Rational& w2);

struct ExpansionResult {
    Multigraph multigraph;
    Integer scale;  ///< R, the LCM of the weight denominators
    WeightedGraph original;
};

/// Scales x by R = LCM of the lowest-terms denominators of the nonzero
/// weights and returns the multigraph with R * x_e copies of each edge.
/// Throws CapExceeded when R > max_scale.
ExpansionResult expand_to_multigraph(const WeightedGraph& g, const Integer& max_scale = Integer(kDefaultExpansionCap));

/// Kirchhoff count of spanning trees with multiplicities, always a nonnegative integer.
Integer count_trees_multigraph(const Multigraph& m);

/// n * (k/2)^(n-1), the spanning-tree lower bound for k-edge-connected multigraphs.
Rational ok_thomassen_bound(int n, const Integer& k);

}  // namespace mtt

#endif  // MTT_TREE_WEIGHT_HPP
