#ifndef MTT_GRAPH_HPP
#define MTT_GRAPH_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mtt/matrix.hpp"
#include "mtt/rational.hpp"

namespace mtt {

/// Vertex labels are 1-based throughout: V = {1, ..., n}.
using Vertex = int;

/// Unordered vertex pair, stored with first < second.
struct VertexPair {
    Vertex first;
    Vertex second;

    /// Normalizes order. Throws InputError on a loop.
    static VertexPair of(Vertex u, Vertex v);

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Simple undirected graph with nonnegative rational edge weights.
///
/// Conceptually complete: an absent pair has weight 0, and storing weight 0
/// is the same as removing the edge, so two graphs that differ only by
/// explicit zero edges compare equal.
class WeightedGraph {
public:
    using EdgeMap = std::map<VertexPair, Rational>;

    explicit WeightedGraph(int n);

    [[nodiscard]] int n() const noexcept { return n_; }

    /// Sets the weight of {u, v}; weight 0 erases the edge.
    /// Throws InputError for loops, out-of-range vertices, or negative weights.
    void set_weight(Vertex u, Vertex v, const Rational& w);
    [[nodiscard]] Rational weight(Vertex u, Vertex v) const;

    /// Edges of nonzero weight, in lexicographic pair order.
    [[nodiscard]] const EdgeMap& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

    [[nodiscard]] Rational degree(Vertex v) const;
    [[nodiscard]] Rational total_weight() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_;
    EdgeMap edges_;
};

/// Loopless unweighted multigraph given by edge multiplicities.
class Multigraph {
public:
    using MultiplicityMap = std::map<VertexPair, Integer>;

    explicit Multigraph(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    void set_multiplicity(Vertex u, Vertex v, const Integer& count);
    [[nodiscard]] Integer multiplicity(Vertex u, Vertex v) const;
    [[nodiscard]] const MultiplicityMap& multiplicities() const noexcept { return mult_; }
    [[nodiscard]] Integer edge_total() const;

    /// The same graph viewed as weighted, each copy contributing weight 1.
    [[nodiscard]] WeightedGraph as_weighted() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_;
    MultiplicityMap mult_;
};

/// A proper nonempty vertex subset S, kept sorted.
class CutSide {
public:
    /// Throws InputError unless the set is nonempty, proper, and within [1, n].
    CutSide(int n, std::vector<Vertex> members);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
    [[nodiscard]] bool contains(Vertex v) const;
    [[nodiscard]] CutSide complement() const;

    friend bool operator==(const CutSide&, const CutSide&) = default;

private:
    int n_;
    std::vector<Vertex> members_;
};

/// Weighted adjacency matrix X: zero diagonal, X_ij = X_ji = x_{ij}.
RationalMatrix adjacency_matrix(const WeightedGraph& g);

/// L(X): off-diagonal -x_{ij}, diagonal the weighted degree.
RationalMatrix laplacian(const WeightedGraph& g);
RationalMatrix laplacian(const Multigraph& m);

/// x(delta(S)).
Rational cut_weight(const WeightedGraph& g, const CutSide& s);

/// Graph file format: {"n": int, "edges": [{"u": int, "v": int, "w": "p/q"}, ...]}.
/// Unknown top-level keys are ignored so that solver output can be fed back in.
WeightedGraph parse_graph(std::string_view text);
WeightedGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const WeightedGraph& g);
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::string& path);

// Fixtures used by tests, the CLI and the acceptance suite.
WeightedGraph cycle_graph(int n, const Rational& w = Rational(1));
WeightedGraph complete_graph(int n, const Rational& w);
WeightedGraph path_graph(int n, const Rational& w = Rational(1));
/// Two triangles {1,2,3}, {4,5,6} of weight 1/2 joined by the matching 1-4, 2-5, 3-6 of weight 1.
WeightedGraph prism_half_point();
/// Two vertex-disjoint weight-1 triangles on {1,2,3} and {4,5,6}.
WeightedGraph two_triangles();

/// Relabels vertices: vertex v becomes perm[v - 1].
WeightedGraph relabel(const WeightedGraph& g, const std::vector<Vertex>& perm);

}  // namespace mtt

#endif  // MTT_GRAPH_HPP
