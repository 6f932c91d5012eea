#ifndef MTT_CONNECTIVITY_HPP
#define MTT_CONNECTIVITY_HPP

#include <vector>

#include "mtt/graph.hpp"
#include "mtt/rational.hpp"

namespace mtt {

struct MinCutResult {
    CutSide side;
    Rational value;
};

/// Global minimum weight cut by Stoer-Wagner over exact weights.
///
/// Maximum-adjacency ties go to the smallest original vertex index, so the
/// returned side is reproducible. Disconnected inputs return value 0 with the
/// connected component containing vertex 1 as the side. Throws InputError if n < 2.
MinCutResult global_min_cut(const WeightedGraph& g);

/// Edge connectivity of a multigraph (its min cut with multiplicities as weights).
Integer edge_connectivity(const Multigraph& m);

struct FeasibilityReport {
    std::vector<bool> degree_ok;  ///< per vertex: x(delta(v)) == 2
    std::vector<bool> bounds_ok;  ///< per nonzero edge, in edge order: 0 <= x_e <= 1
    MinCutResult min_cut;
    bool cut_ok = false;  ///< min cut >= 2

    [[nodiscard]] bool degrees_hold() const;
    [[nodiscard]] bool bounds_hold() const;
    [[nodiscard]] bool feasible() const { return degrees_hold() && bounds_hold() && cut_ok; }
};

/// Checks every constraint family of the subtour LP exactly. The single min
/// cut certifies all subset constraints at once. Requires n >= 2.
FeasibilityReport check_subtour_feasible(const WeightedGraph& g);

/// Bounds and min cut >= 2, without the degree equalities.
bool cut_only_feasible(const WeightedGraph& g);

}  // namespace mtt

#endif  // MTT_CONNECTIVITY_HPP
