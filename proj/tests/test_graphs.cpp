#include <doctest.h>

#include <set>

#include "grcol/graphs.hpp"
#include "test_util.hpp"

using namespace grcol;
using graphs::Family;

TEST_CASE("adjacency predicates on hand vectors") {
    const gf::Gf f2(2, 1);
    const auto spaces = linalg::all_subspaces(4, 2, f2);

    linalg::FqMatrix a(2, 4), b(2, 4), c(2, 4);
    a.at(0, 0) = 1; a.at(1, 1) = 1; // span{e1,e2}
    b.at(0, 1) = 1; b.at(1, 2) = 1; // span{e2,e3}
    c.at(0, 2) = 1; c.at(1, 3) = 1; // span{e3,e4}
    const auto sa = linalg::rref(a, f2), sb = linalg::rref(b, f2), sc = linalg::rref(c, f2);

    CHECK(!graphs::grassmann_adjacent(sa, sa, f2));
    CHECK(graphs::grassmann_adjacent(sa, sb, f2));
    CHECK(!graphs::grassmann_adjacent(sa, sc, f2));

    CHECK(!graphs::kneser_adjacent(sa, sa, f2));
    CHECK(graphs::kneser_adjacent(sa, sc, f2));
    CHECK(!graphs::kneser_adjacent(sa, sb, f2));

    // K_q(n,1) is complete: distinct points always meet trivially
    const auto points = linalg::all_subspaces(3, 1, f2);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            CHECK(graphs::kneser_adjacent(points[i], points[j], f2) == (i != j));

    const auto point = linalg::all_subspaces(4, 1, f2).front();
    CHECK_THROWS_AS(graphs::grassmann_adjacent(sa, point, f2), Error);
}

TEST_CASE("johnson adjacency") {
    const std::vector<int> a{1, 2}, b{1, 3}, c{3, 4}, same{1, 2};
    CHECK(graphs::johnson_adjacent(a, b, 4, 2));
    CHECK(!graphs::johnson_adjacent(a, c, 4, 2));
    CHECK(!graphs::johnson_adjacent(a, same, 4, 2));
    CHECK_THROWS_AS(graphs::johnson_adjacent(std::vector<int>{1, 5}, b, 4, 2), Error);
    CHECK_THROWS_AS(graphs::johnson_adjacent(std::vector<int>{2, 1}, b, 4, 2), Error);
    CHECK_THROWS_AS(graphs::johnson_adjacent(std::vector<int>{1}, b, 4, 2), Error);
}

TEST_CASE("grassmann J_2(4,2): 35 vertices, 18-regular") {
    const auto g = graphs::build_graph(Family::grassmann, 2, 4, 2);
    CHECK(g.num_vertices() == 35);
    REQUIRE(g.bits.has_value());
    CHECK(g.regular_degree == 18);
    CHECK(*g.edges == 35 * 18 / 2);
}

TEST_CASE("grassmann J_2(3,2) is the complete graph K_7") {
    const auto g = graphs::build_graph(Family::grassmann, 2, 3, 2);
    CHECK(g.num_vertices() == 7);
    CHECK(*g.edges == 21);
    CHECK(g.regular_degree == 6);
}

TEST_CASE("qkneser K_2(4,2): each 2-space has 16 complements") {
    // independent route: count complements of span{e1,e2} by comparing
    // explicit vector sets, no rank computation involved
    const gf::Gf f2(2, 1);
    const auto spaces = linalg::all_subspaces(4, 2, f2);
    linalg::FqMatrix m(2, 4);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    const auto s = linalg::rref(m, f2);
    const auto s_vectors = testutil::vector_set(s, f2);
    int complements = 0;
    for (const auto& t : spaces) {
        const auto t_vectors = testutil::vector_set(t, f2);
        std::size_t common = 0;
        for (const auto& v : t_vectors) common += s_vectors.count(v);
        if (common == 1) ++complements; // only the zero vector shared
    }
    CHECK(complements == 16);

    const auto g = graphs::build_graph(Family::qkneser, 2, 4, 2);
    CHECK(g.num_vertices() == 35);
    CHECK(g.regular_degree == 16);
}

TEST_CASE("johnson vertex counts and build") {
    const auto g = graphs::build_graph(Family::johnson, 0, 5, 2);
    CHECK(g.num_vertices() == 10); // C(5,2)
    CHECK(g.regular_degree == 2 * 3); // m(n-m)
    const auto g73 = graphs::build_graph(Family::johnson, 0, 7, 3);
    CHECK(g73.num_vertices() == 35);
}

TEST_CASE("valency formula matches built degrees") {
    CHECK(graphs::valency(2, 4, 2) == 18);
    CHECK(graphs::valency(2, 4, 1) == 14);
    CHECK(graphs::valency(4, 4, 2) == 100);
    CHECK_THROWS_AS(graphs::valency(2, 4, 4), Error);

    // J_2(4,1) is complete on 15 vertices
    const auto g = graphs::build_graph(Family::grassmann, 2, 4, 1);
    CHECK(g.num_vertices() == 15);
    CHECK(g.regular_degree == 14);

    for (auto [q, n, m] : {std::tuple<int, int, int>{2, 4, 2}, {3, 4, 2}, {2, 5, 2}, {3, 4, 3}}) {
        const auto gr = graphs::build_graph(Family::grassmann, q, n, m);
        REQUIRE(gr.regular_degree.has_value());
        CHECK(linalg::BigInt(*gr.regular_degree) == graphs::valency(q, n, m));
    }
}

TEST_CASE("pencil cliques") {
    const gf::Gf f2(2, 1);

    // lines of PG(3,2) through the point e1
    const auto e1 = linalg::all_subspaces(4, 1, f2).front();
    const auto pencil = graphs::pencil_clique(e1, f2);
    CHECK(pencil.size() == 7);
    for (std::size_t i = 0; i < pencil.size(); ++i) {
        CHECK(linalg::intersect_dim(pencil[i], e1, f2) == 1); // contains t
        for (std::size_t j = i + 1; j < pencil.size(); ++j)
            CHECK(graphs::grassmann_adjacent(pencil[i], pencil[j], f2));
    }
    // maximality: no further 2-space through e1 exists
    int through = 0;
    for (const auto& s : linalg::all_subspaces(4, 2, f2))
        if (linalg::intersect_dim(s, e1, f2) == 1) ++through;
    CHECK(through == 7);

    // degenerate m = 1: the pencil through the zero space is all points
    const auto all_points = graphs::pencil_clique(linalg::Subspace::zero_space(4), f2);
    CHECK(all_points.size() == 15);

    const gf::Gf f3(3, 1);
    const auto pencil3 = graphs::pencil_clique(linalg::all_subspaces(4, 1, f3).front(), f3);
    CHECK(linalg::BigInt(pencil3.size()) == linalg::gaussian_binomial(3, 1, 3)); // 13
}

TEST_CASE("build guards") {
    graphs::BuildCaps caps;
    caps.enum_cap = 10;
    CHECK_THROWS_AS(graphs::build_graph(Family::grassmann, 2, 4, 2, caps), Error);
    CHECK_THROWS_AS(graphs::build_graph(Family::grassmann, 6, 4, 2), Error); // q not a prime power
}

TEST_CASE("predicate-on-demand above the materialize cap") {
    graphs::BuildCaps caps;
    caps.materialize_cap = 10; // force predicate mode
    const auto g = graphs::build_graph(Family::grassmann, 2, 4, 2, caps);
    CHECK(!g.bits.has_value());
    CHECK(!g.edges.has_value());
    const auto materialized = graphs::build_graph(Family::grassmann, 2, 4, 2);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        CHECK(g.degree(i) == 18);
        for (std::size_t j = i + 1; j < g.num_vertices(); ++j) {
            CHECK(g.adjacent(i, j) == materialized.adjacent(i, j));
            if (g.adjacent(i, j)) ++edges;
        }
    }
    CHECK(edges == 315);
}
