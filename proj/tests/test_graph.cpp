#include <random>

#include "doctest.h"
#include "mtt/errors.hpp"
#include "mtt/graph.hpp"
#include "mtt/tree_weight.hpp"
#include "oracles.hpp"

using mtt::CutSide;
using mtt::Integer;
using mtt::Rational;
using mtt::RationalMatrix;
using mtt::WeightedGraph;

namespace {
const Rational kHalf(Integer(1), Integer(2));
}

TEST_CASE("adjacency matrix")
{
    CHECK(adjacency_matrix(mtt::cycle_graph(3)) == RationalMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(adjacency_matrix(WeightedGraph(3)) == RationalMatrix(3));

    const RationalMatrix x = adjacency_matrix(mtt::prism_half_point());
    for (std::size_t i = 0; i < 6; ++i) {
        Rational row;
        int halves = 0;
        int ones = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(x(i, j) == x(j, i));
            row += x(i, j);
            halves += x(i, j) == kHalf ? 1 : 0;
            ones += x(i, j) == Rational(1) ? 1 : 0;
        }
        CHECK(x(i, i) == Rational(0));
        CHECK(row == Rational(2));
        CHECK(halves == 2);
        CHECK(ones == 1);
    }
}

TEST_CASE("laplacian")
{
    CHECK(laplacian(mtt::cycle_graph(3)) == RationalMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});

    WeightedGraph single(2);
    const Rational w(Integer(5), Integer(3));
    single.set_weight(1, 2, w);
    CHECK(laplacian(single) == RationalMatrix{{w, -w}, {-w, w}});

    // Weighted degree 2 everywhere gives L = 2I - X.
    for (const auto& g : {mtt::prism_half_point(), mtt::cycle_graph(7)}) {
        RationalMatrix expected = Rational(2) * RationalMatrix::identity(static_cast<std::size_t>(g.n()));
        expected -= adjacency_matrix(g);
        CHECK(laplacian(g) == expected);
    }
}

TEST_CASE("laplacian and adjacency structural properties on random graphs")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 8;
        const WeightedGraph g = oracle::random_graph(rng, n, 20);
        const RationalMatrix l = laplacian(g);
        const RationalMatrix x = adjacency_matrix(g);
        for (int i = 0; i < n; ++i) {
            Rational row;
            for (int j = 0; j < n; ++j) {
                row += l(i, j);
                CHECK(x(i, j) == x(j, i));
            }
            CHECK(row == Rational(0));
            CHECK(x(i, i) == Rational(0));
        }
    }
}

TEST_CASE("explicit zero-weight edges change nothing")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 5;
        const WeightedGraph g = oracle::random_graph(rng, n, 8);
        WeightedGraph padded = g;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (g.weight(u, v).is_zero()) padded.set_weight(u, v, Rational(0));
        CHECK(padded == g);
        CHECK(laplacian(padded) == laplacian(g));
        CHECK(mtt::tree_weight_kirchhoff(padded) == mtt::tree_weight_kirchhoff(g));

        // Same statement through the parser: a file listing "0" edges.
        nlohmann::json doc = mtt::graph_to_json(g);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (g.weight(u, v).is_zero()) doc["edges"].push_back({{"u", u}, {"v", v}, {"w", "0"}});
        CHECK(mtt::graph_from_json(doc) == g);
    }
}

TEST_CASE("cut weight")
{
    CHECK(cut_weight(mtt::prism_half_point(), CutSide(6, {1, 2, 3})) == Rational(3));
    CHECK(cut_weight(mtt::two_triangles(), CutSide(6, {1, 2, 3})) == Rational(0));
    CHECK(cut_weight(mtt::prism_half_point(), CutSide(6, {1, 4})) == Rational(2));
    CHECK_THROWS_AS(CutSide(3, {}), mtt::InputError);
    CHECK_THROWS_AS(CutSide(3, {1, 2, 3}), mtt::InputError);
    CHECK_THROWS_AS(CutSide(3, {4}), mtt::InputError);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 7;
        const WeightedGraph g = oracle::random_graph(rng, n, 15);
        std::vector<int> members;
        std::bernoulli_distribution coin(0.5);
        for (int v = 1; v <= n; ++v)
            if (coin(rng)) members.push_back(v);
        if (members.empty()) members.push_back(1);
        if (static_cast<int>(members.size()) == n) members.pop_back();
        const CutSide s(n, members);
        CHECK(cut_weight(g, s) == cut_weight(g, s.complement()));

        Rational inside;
        Rational outside;
        for (const auto& [e, w] : g.edges()) {
            if (s.contains(e.first) && s.contains(e.second)) inside += w;
            if (!s.contains(e.first) && !s.contains(e.second)) outside += w;
        }
        Rational degree_sum;
        for (int v : s.members()) degree_sum += g.degree(v);
        CHECK(cut_weight(g, s) == degree_sum - Rational(2) * inside);
        CHECK(Rational(2) * cut_weight(g, s) + Rational(2) * inside + Rational(2) * outside ==
              Rational(2) * g.total_weight());
    }
}

TEST_CASE("parse graph")
{
    const WeightedGraph tri = mtt::parse_graph(
        R"({"n":3,"edges":[{"u":1,"v":2,"w":"1"},{"u":2,"v":3,"w":"1"},{"u":1,"v":3,"w":"1"}]})");
    CHECK(tri == mtt::cycle_graph(3));

    const WeightedGraph half = mtt::parse_graph(R"({"n":2,"edges":[{"u":2,"v":1,"w":"1/2"}]})");
    CHECK(half.weight(1, 2) == kHalf);

    CHECK_THROWS_WITH_AS(mtt::parse_graph(R"({"n":2,"edges":[{"u":1,"v":1,"w":"1"}]})"),
                         doctest::Contains("loop"), mtt::ParseError);
    CHECK_THROWS_WITH_AS(mtt::parse_graph(R"({"n":2,"edges":[{"u":1,"v":2,"w":"-1"}]})"),
                         doctest::Contains("negative"), mtt::ParseError);
    CHECK_THROWS_WITH_AS(mtt::parse_graph(R"({"n":2,"edges":[{"u":1,"v":3,"w":"1"}]})"),
                         doctest::Contains("edges[0]"), mtt::ParseError);
    CHECK_THROWS_WITH_AS(mtt::parse_graph(R"({"n":3,"edges":[{"u":1,"v":2,"w":"1"},{"u":2,"v":1,"w":"2"}]})"),
                         doctest::Contains("duplicate"), mtt::ParseError);
    CHECK_THROWS_WITH_AS(mtt::parse_graph(R"({"n":2,"edges":[{"u":1,"v":2,"w":"0.5"}]})"),
                         doctest::Contains("edges[0].w"), mtt::ParseError);
    CHECK_THROWS_WITH_AS(mtt::parse_graph(R"({"n":2,"edges":[{"u":1,"v":2,"w":1}]})"),
                         doctest::Contains("fraction string"), mtt::ParseError);
    CHECK_THROWS_AS(mtt::parse_graph(R"({"edges":[]})"), mtt::ParseError);
    CHECK_THROWS_AS(mtt::parse_graph(R"({"n":0,"edges":[]})"), mtt::ParseError);

    try {
        mtt::parse_graph("{\"n\": 3,\n\"edges\": [\n{\"u\": 1 \"v\": 2}]}");
        FAIL("expected a parse error");
    } catch (const mtt::ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("serialize round trip")
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const WeightedGraph g = oracle::random_graph(rng, 1 + trial % 9, 20);
        const std::string text = mtt::serialize_graph(g);
        CHECK(mtt::parse_graph(text) == g);
        CHECK(text.find('.') == std::string::npos);
    }
    CHECK(mtt::serialize_graph(mtt::prism_half_point()).find(R"("w":"1/2")") != std::string::npos);
}

TEST_CASE("weighted graph contract")
{
    WeightedGraph g(3);
    CHECK_THROWS_AS(g.set_weight(1, 1, Rational(1)), mtt::InputError);
    CHECK_THROWS_AS(g.set_weight(1, 4, Rational(1)), mtt::InputError);
    CHECK_THROWS_AS(g.set_weight(1, 2, Rational(-1)), mtt::InputError);
    g.set_weight(2, 1, Rational(3));
    CHECK(g.weight(1, 2) == Rational(3));
    g.set_weight(1, 2, Rational(0));
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(WeightedGraph(0), mtt::InputError);
}
