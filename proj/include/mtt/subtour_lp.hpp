#ifndef MTT_SUBTOUR_LP_HPP
#define MTT_SUBTOUR_LP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mtt/graph.hpp"
#include "mtt/rational.hpp"

namespace mtt {

enum class Relation { Equal, GreaterEqual, LessEqual };

struct LinearConstraint {
    std::vector<Rational> coefficients;  ///< dense, one per variable
    Relation relation;
    Rational rhs;
};

struct VariableBounds {
    Rational lower;
    std::optional<Rational> upper;  ///< nullopt means +infinity
};

/// min c.x subject to the rows and lower <= x <= upper.
struct LpModel {
    std::vector<Rational> objective;
    std::vector<VariableBounds> bounds;
    std::vector<LinearConstraint> constraints;

    [[nodiscard]] std::size_t variable_count() const { return objective.size(); }

    /// Appends a variable with the given cost and bounds; returns its index.
    std::size_t add_variable(const Rational& cost, const Rational& lower, std::optional<Rational> upper);
    void add_constraint(std::vector<Rational> coefficients, Relation relation, const Rational& rhs);
};

/// Optimal basic feasible solution.
struct ExtremePoint {
    std::vector<Rational> x;
    Rational objective_value;
    /// Structural variables that are basic in the final basis; every other
    /// structural sits at one of its bounds.
    std::vector<std::size_t> basic_variables;
};

/// Exact two-phase bounded-variable primal simplex with Bland's rule.
/// Upper bounds are handled as bound flips rather than rows.
/// Throws InfeasibleModel, UnboundedModel, or InputError (malformed model).
ExtremePoint simplex_solve(const LpModel& model);

/// Edge indexing of K_n: pairs (i, j), i < j, in lexicographic order.
class EdgeIndex {
public:
    explicit EdgeIndex(int n);
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const;
    [[nodiscard]] VertexPair pair(std::size_t k) const { return pairs_.at(k); }

private:
    int n_;
    std::vector<VertexPair> pairs_;
};

/// Costs for every edge of K_n, indexed by EdgeIndex.
struct CostVector {
    int n;
    std::vector<Rational> costs;
};

/// {"n": int, "costs": [{"u": int, "v": int, "c": "p/q"}, ...]} with all n(n-1)/2 pairs present.
CostVector parse_costs(std::string_view text);
CostVector read_costs_file(const std::string& path);
nlohmann::json costs_to_json(const CostVector& costs);

/// Integers in [1, 1000], fully determined by (n, seed).
CostVector random_instance(int n, std::uint64_t seed);

/// Degree equalities and 0 <= x_e <= 1 over K_n.
LpModel degree_model(const CostVector& costs);

/// Appends x(delta(S)) >= 2.
void add_subtour_cut(LpModel& model, const EdgeIndex& edges, const CutSide& side);

WeightedGraph point_to_graph(int n, const std::vector<Rational>& x);
std::vector<Rational> graph_to_point(const WeightedGraph& g);

inline constexpr std::size_t kDefaultCutCap = 500;

struct SubtourSolution {
    ExtremePoint point;
    std::size_t cuts_added = 0;
    std::vector<CutSide> cuts;  ///< in the order they were added
    LpModel final_model;
};

/// Cutting-plane loop: solve, separate by global min cut, add the violated
/// subtour constraint, repeat. Throws CapExceeded after `cut_cap` cuts and
/// InputError for n < 3.
SubtourSolution solve_subtour_lp(const CostVector& costs, std::size_t cut_cap = kDefaultCutCap);

/// t*a + (1-t)*b. Throws InputError on length mismatch or t outside [0, 1].
std::vector<Rational> convex_combine(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                     const Rational& t);
WeightedGraph convex_combine(const WeightedGraph& a, const WeightedGraph& b, const Rational& t);

}  // namespace mtt

#endif  // MTT_SUBTOUR_LP_HPP
