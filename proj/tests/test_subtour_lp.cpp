#include <random>

#include "doctest.h"
#include "mtt/connectivity.hpp"
#include "mtt/errors.hpp"
#include "mtt/subtour_lp.hpp"
#include "oracles.hpp"

using mtt::CostVector;
using mtt::EdgeIndex;
using mtt::Integer;
using mtt::LpModel;
using mtt::Rational;
using mtt::Relation;

namespace {

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

// Rows of every constraint tight at x (rows of the model, then active bounds).
std::vector<std::vector<Rational>> tight_rows(const LpModel& model, const std::vector<Rational>& x)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : model.constraints) {
        Rational lhs;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
        if (lhs == c.rhs) rows.push_back(c.coefficients);
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto& b = model.bounds[j];
        if (x[j] == b.lower || (b.upper && x[j] == *b.upper)) {
            std::vector<Rational> unit(x.size());
            unit[j] = Rational(1);
            rows.push_back(std::move(unit));
        }
    }
    return rows;
}

bool satisfies(const LpModel& model, const std::vector<Rational>& x)
{
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < model.bounds[j].lower) return false;
        if (model.bounds[j].upper && x[j] > *model.bounds[j].upper) return false;
    }
    for (const auto& c : model.constraints) {
        Rational lhs;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
        if (c.relation == Relation::Equal && lhs != c.rhs) return false;
        if (c.relation == Relation::GreaterEqual && lhs < c.rhs) return false;
        if (c.relation == Relation::LessEqual && lhs > c.rhs) return false;
    }
    return true;
}

CostVector prism_support_costs()
{
    const EdgeIndex index(6);
    CostVector c{6, std::vector<Rational>(index.size(), Rational(1))};
    for (const auto prism = mtt::prism_half_point(); const auto& [e, w] : prism.edges()) c.costs[index.index(e.first, e.second)] = Rational(0);
    return c;
}

CostVector two_triangle_costs()
{
    const EdgeIndex index(6);
    CostVector c{6, std::vector<Rational>(index.size(), Rational(100))};
    for (const auto tri = mtt::two_triangles(); const auto& [e, w] : tri.edges()) c.costs[index.index(e.first, e.second)] = Rational(1);
    return c;
}

}  // namespace

TEST_CASE("simplex: single bounded variable")
{
    LpModel m;
    m.add_variable(Rational(1), Rational(2), Rational(3));
    const auto p = mtt::simplex_solve(m);
    CHECK(p.x == std::vector<Rational>{2});
    CHECK(p.objective_value == Rational(2));

    LpModel maxim;
    maxim.add_variable(Rational(-1), Rational(2), Rational(3));
    CHECK(mtt::simplex_solve(maxim).x == std::vector<Rational>{3});
}

TEST_CASE("simplex: small textbook models")
{
    // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3, x, y >= 0 -> (3, 1), value 11
    LpModel m;
    m.add_variable(Rational(-3), Rational(0), std::nullopt);
    m.add_variable(Rational(-2), Rational(0), std::nullopt);
    m.add_constraint({1, 1}, Relation::LessEqual, Rational(4));
    m.add_constraint({1, 3}, Relation::LessEqual, Rational(6));
    m.add_constraint({1, 0}, Relation::LessEqual, Rational(3));
    const auto p = mtt::simplex_solve(m);
    CHECK(p.x == std::vector<Rational>{3, 1});
    CHECK(p.objective_value == Rational(-11));

    // min x + y s.t. 2x + y >= 3, x + 3y >= 4 -> (1, 1)
    LpModel g;
    g.add_variable(Rational(1), Rational(0), std::nullopt);
    g.add_variable(Rational(1), Rational(0), std::nullopt);
    g.add_constraint({2, 1}, Relation::GreaterEqual, Rational(3));
    g.add_constraint({1, 3}, Relation::GreaterEqual, Rational(4));
    const auto q = mtt::simplex_solve(g);
    CHECK(q.x == std::vector<Rational>{1, 1});

    // Fractional vertex: min -x - y s.t. 3x + y <= 2, x + 3y <= 2 -> (1/2, 1/2)
    LpModel f;
    f.add_variable(Rational(-1), Rational(0), std::nullopt);
    f.add_variable(Rational(-1), Rational(0), std::nullopt);
    f.add_constraint({3, 1}, Relation::LessEqual, Rational(2));
    f.add_constraint({1, 3}, Relation::LessEqual, Rational(2));
    CHECK(mtt::simplex_solve(f).x == std::vector<Rational>{frac(1, 2), frac(1, 2)});
}

TEST_CASE("simplex: infeasible and unbounded models")
{
    LpModel inf;
    inf.add_variable(Rational(1), Rational(0), Rational(1));
    inf.add_variable(Rational(1), Rational(0), Rational(1));
    inf.add_constraint({1, 1}, Relation::GreaterEqual, Rational(3));
    CHECK_THROWS_AS(mtt::simplex_solve(inf), mtt::InfeasibleModel);

    LpModel unb;
    unb.add_variable(Rational(-1), Rational(0), std::nullopt);
    unb.add_variable(Rational(0), Rational(0), std::nullopt);
    unb.add_constraint({1, -1}, Relation::LessEqual, Rational(1));
    CHECK_THROWS_AS(mtt::simplex_solve(unb), mtt::UnboundedModel);

    LpModel bad;
    bad.add_variable(Rational(0), Rational(1), Rational(0));
    CHECK_THROWS_AS(mtt::simplex_solve(bad), mtt::InfeasibleModel);

    LpModel ragged;
    ragged.add_variable(Rational(0), Rational(0), Rational(1));
    CHECK_THROWS_AS(ragged.add_constraint({1, 1}, Relation::Equal, Rational(1)), mtt::InputError);
}

TEST_CASE("simplex: degree model on K_3 has a unique point")
{
    CostVector c{3, {Rational(4), frac(-1, 2), Rational(7)}};
    const auto p = mtt::simplex_solve(mtt::degree_model(c));
    CHECK(p.x == std::vector<Rational>{1, 1, 1});
    CHECK(p.objective_value == Rational(4) + frac(-1, 2) + Rational(7));
}

TEST_CASE("simplex: degree identity fixes the objective with unit costs")
{
    CostVector c{5, std::vector<Rational>(10, Rational(1))};
    CHECK(mtt::simplex_solve(mtt::degree_model(c)).objective_value == Rational(5));
}

TEST_CASE("simplex: random dense models give vertices that satisfy every row")
{
    std::mt19937_64 rng(51);
    int solved = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t vars = 2 + static_cast<std::size_t>(trial % 5);
        LpModel m;
        for (std::size_t j = 0; j < vars; ++j)
            m.add_variable(oracle::random_signed_rational(rng, 5, 3), Rational(0), Rational(2));
        const std::size_t rows = 1 + static_cast<std::size_t>(trial % 4);
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<Rational> a(vars);
            for (auto& v : a) v = oracle::random_signed_rational(rng, 4, 2);
            const auto rel = static_cast<Relation>(i % 3);
            m.add_constraint(std::move(a), rel, oracle::random_signed_rational(rng, 3, 2));
        }
        try {
            const auto p = mtt::simplex_solve(m);
            CHECK(satisfies(m, p.x));
            CHECK(oracle::rank(tight_rows(m, p.x)) == vars);
            ++solved;
        } catch (const mtt::InfeasibleModel&) {
        }
    }
    CHECK(solved > 20);
}

TEST_CASE("edge index")
{
    const EdgeIndex idx(5);
    CHECK(idx.size() == 10);
    std::size_t k = 0;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) {
            CHECK(idx.index(u, v) == k);
            CHECK(idx.index(v, u) == k);
            CHECK(idx.pair(k).first == u);
            CHECK(idx.pair(k).second == v);
            ++k;
        }
}

TEST_CASE("random instance")
{
    const auto a = mtt::random_instance(5, 42);
    const auto b = mtt::random_instance(5, 42);
    CHECK(a.costs == b.costs);
    CHECK(mtt::random_instance(3, 9).costs.size() == 3);
    CHECK(mtt::random_instance(5, 43).costs != a.costs);
    for (const auto& c : mtt::random_instance(6, 7).costs) {
        CHECK(c.is_integer());
        CHECK(c >= Rational(1));
        CHECK(c <= Rational(1000));
    }
    CHECK_THROWS_AS(mtt::random_instance(2, 1), mtt::InputError);
}

TEST_CASE("instance parsing")
{
    const auto c = mtt::parse_costs(
        R"({"n":3,"costs":[{"u":1,"v":2,"c":"1"},{"u":3,"v":2,"c":"-1/2"},{"u":1,"v":3,"c":"4"}]})");
    CHECK(c.costs == std::vector<Rational>{1, 4, frac(-1, 2)});
    CHECK_THROWS_WITH_AS(mtt::parse_costs(R"({"n":3,"costs":[{"u":1,"v":2,"c":"1"},{"u":1,"v":3,"c":"4"}]})"),
                         doctest::Contains("missing cost"), mtt::ParseError);
    CHECK_THROWS_WITH_AS(
        mtt::parse_costs(
            R"({"n":3,"costs":[{"u":1,"v":2,"c":"1"},{"u":2,"v":1,"c":"1"},{"u":1,"v":3,"c":"4"},{"u":2,"v":3,"c":"4"}]})"),
        doctest::Contains("duplicate"), mtt::ParseError);
    CHECK_THROWS_AS(mtt::parse_costs(R"({"n":2,"costs":[]})"), mtt::ParseError);
    const auto r = mtt::random_instance(6, 3);
    CHECK(mtt::parse_costs(mtt::costs_to_json(r).dump()).costs == r.costs);
}

TEST_CASE("subtour LP: n = 3")
{
    const auto sol = mtt::solve_subtour_lp(mtt::random_instance(3, 5));
    CHECK(sol.point.x == std::vector<Rational>{1, 1, 1});
    CHECK(sol.cuts_added == 0);
    CHECK_THROWS_AS(mtt::solve_subtour_lp(CostVector{2, {Rational(1)}}), mtt::InputError);
}

TEST_CASE("subtour LP: prism support costs reach objective 0")
{
    const auto sol = mtt::solve_subtour_lp(prism_support_costs());
    CHECK(sol.point.objective_value == Rational(0));
    CHECK(mtt::check_subtour_feasible(mtt::point_to_graph(6, sol.point.x)).feasible());
    // The prism point itself is optimal for these costs.
    const auto prism_x = mtt::graph_to_point(mtt::prism_half_point());
    CHECK(satisfies(sol.final_model, prism_x));
}

TEST_CASE("subtour LP: cheap disjoint triangles force a cut")
{
    const auto costs = two_triangle_costs();
    const auto initial = mtt::simplex_solve(mtt::degree_model(costs));
    CHECK(mtt::point_to_graph(6, initial.x) == mtt::two_triangles());

    const auto sol = mtt::solve_subtour_lp(costs);
    CHECK(sol.cuts_added >= 1);
    CHECK(sol.cuts.size() == sol.cuts_added);
    CHECK(mtt::check_subtour_feasible(mtt::point_to_graph(6, sol.point.x)).feasible());
    CHECK_THROWS_AS(mtt::solve_subtour_lp(costs, 0), mtt::CapExceeded);
}

TEST_CASE("subtour LP: sampled points are feasible vertices, deterministic, and lower-bound tours")
{
    for (int n = 4; n <= 7; ++n)
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const auto costs = mtt::random_instance(n, seed * 977 + static_cast<std::uint64_t>(n));
            const auto sol = mtt::solve_subtour_lp(costs);
            const auto g = mtt::point_to_graph(n, sol.point.x);
            CHECK(mtt::check_subtour_feasible(g).feasible());
            CHECK(satisfies(sol.final_model, sol.point.x));
            CHECK(oracle::rank(tight_rows(sol.final_model, sol.point.x)) == sol.point.x.size());
            CHECK(sol.point.objective_value <= oracle::min_tour_cost(costs));

            const auto again = mtt::solve_subtour_lp(costs);
            CHECK(again.point.x == sol.point.x);
            CHECK(again.cuts == sol.cuts);
        }
}

TEST_CASE("convex combination")
{
    const auto c6 = mtt::graph_to_point(mtt::cycle_graph(6));
    const auto prism = mtt::graph_to_point(mtt::prism_half_point());
    CHECK(mtt::convex_combine(c6, prism, Rational(0)) == prism);
    CHECK(mtt::convex_combine(c6, prism, Rational(1)) == c6);

    std::vector<int> perm{1, 3, 5, 2, 4, 6};
    const auto shifted = mtt::graph_to_point(mtt::relabel(mtt::cycle_graph(6), perm));
    const auto mid = mtt::point_to_graph(6, mtt::convex_combine(c6, shifted, frac(1, 2)));
    for (int v = 1; v <= 6; ++v) CHECK(mid.degree(v) == Rational(2));

    for (const Rational& t : {frac(1, 3), frac(1, 2), frac(5, 7)}) {
        const auto g = mtt::convex_combine(mtt::cycle_graph(6), mtt::prism_half_point(), t);
        CHECK(mtt::check_subtour_feasible(g).feasible());
    }

    CHECK_THROWS_AS(mtt::convex_combine(c6, {Rational(1)}, Rational(0)), mtt::InputError);
    CHECK_THROWS_AS(mtt::convex_combine(c6, prism, Rational(2)), mtt::InputError);
    CHECK_THROWS_AS(mtt::convex_combine(c6, prism, Rational(-1)), mtt::InputError);
}
