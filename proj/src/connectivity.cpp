#include "mtt/connectivity.hpp"

#include <algorithm>
#include <optional>

#include "mtt/errors.hpp"

namespace mtt {

namespace {

std::vector<Vertex> component_of_first(const WeightedGraph& g)
{
    const int n = g.n();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n + 1));
    for (const auto& [e, w] : g.edges()) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    std::vector<Vertex> stack{1};
    std::vector<Vertex> comp;
    seen[1] = true;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (Vertex u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    return comp;
}

}  // namespace

MinCutResult global_min_cut(const WeightedGraph& g)
{
    const int n = g.n();
    if (n < 2) throw InputError("global_min_cut needs n >= 2");

    std::vector<Vertex> comp = component_of_first(g);
    if (static_cast<int>(comp.size()) < n) return {CutSide(n, std::move(comp)), Rational(0)};

    const auto size = static_cast<std::size_t>(n);
    // Super-vertices are indexed 0..n-1; a merged-away vertex goes inactive.
    std::vector<std::vector<Rational>> w(size, std::vector<Rational>(size));
    for (const auto& [e, x] : g.edges()) {
        w[e.first - 1][e.second - 1] = x;
        w[e.second - 1][e.first - 1] = x;
    }
    std::vector<std::vector<Vertex>> members(size);
    for (std::size_t v = 0; v < size; ++v) members[v] = {static_cast<Vertex>(v + 1)};
    // Smallest original label in each super-vertex, the tie-break key.
    std::vector<Vertex> label(size);
    for (std::size_t v = 0; v < size; ++v) label[v] = static_cast<Vertex>(v + 1);
    std::vector<bool> active(size, true);

    std::optional<Rational> best;
    std::vector<Vertex> best_side;

    for (std::size_t phase = 0; phase + 1 < size; ++phase) {
        std::vector<bool> in_a(size, false);
        std::vector<Rational> key(size);
        std::size_t remaining = size - phase;
        std::size_t prev = size;
        std::size_t last = size;
        for (std::size_t step = 0; step < remaining; ++step) {
            std::size_t pick = size;
            for (std::size_t v = 0; v < size; ++v) {
                if (!active[v] || in_a[v]) continue;
                if (pick == size || key[v] > key[pick] || (key[v] == key[pick] && label[v] < label[pick])) pick = v;
            }
            in_a[pick] = true;
            prev = last;
            last = pick;
            for (std::size_t v = 0; v < size; ++v)
                if (active[v] && !in_a[v]) key[v] += w[pick][v];
        }

        const Rational cut_of_phase = key[last];
        if (!best || cut_of_phase < *best) {
            best = cut_of_phase;
            best_side = members[last];
        }

        // Merge `last` into `prev`.
        for (std::size_t v = 0; v < size; ++v) {
            if (!active[v] || v == prev || v == last) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        label[prev] = std::min(label[prev], label[last]);
        active[last] = false;
    }

    return {CutSide(n, std::move(best_side)), *best};
}

Integer edge_connectivity(const Multigraph& m)
{
    if (m.n() < 2) throw InputError("edge_connectivity needs n >= 2");
    return global_min_cut(m.as_weighted()).value.numerator();
}

bool FeasibilityReport::degrees_hold() const
{
    return std::all_of(degree_ok.begin(), degree_ok.end(), [](bool b) { return b; });
}

bool FeasibilityReport::bounds_hold() const
{
    return std::all_of(bounds_ok.begin(), bounds_ok.end(), [](bool b) { return b; });
}

FeasibilityReport check_subtour_feasible(const WeightedGraph& g)
{
    FeasibilityReport report{{}, {}, global_min_cut(g), false};
    for (Vertex v = 1; v <= g.n(); ++v) report.degree_ok.push_back(g.degree(v) == Rational(2));
    // Weights are nonnegative by construction; only the upper bound can fail.
    for (const auto& [e, w] : g.edges()) report.bounds_ok.push_back(w.sign() >= 0 && w <= Rational(1));
    report.cut_ok = report.min_cut.value >= Rational(2);
    return report;
}

bool cut_only_feasible(const WeightedGraph& g)
{
    const FeasibilityReport r = check_subtour_feasible(g);
    return r.bounds_hold() && r.cut_ok;
}

}  // namespace mtt
