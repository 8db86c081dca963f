#include <doctest.h>

#include "grcol/colorings.hpp"
#include "grcol/oracle.hpp"
#include "test_util.hpp"

using namespace grcol;
using graphs::BitGraph;
using graphs::Family;

namespace {

bool is_proper(const BitGraph& g, const std::vector<int>& color) {
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j)
            if (g.test(i, j) && color[i] == color[j]) return false;
    return true;
}

} // namespace

TEST_CASE("dsatur basics") {
    const BitGraph edgeless(5);
    CHECK(oracle::greedy_dsatur(edgeless).num_colors == 1);

    const auto k7 = testutil::complete_graph(7);
    const auto rk7 = oracle::greedy_dsatur(k7);
    CHECK(rk7.num_colors == 7);
    CHECK(is_proper(k7, rk7.color));

    const auto g = graphs::build_graph(Family::grassmann, 2, 4, 2);
    const auto r = oracle::greedy_dsatur(*g.bits);
    CHECK(is_proper(*g.bits, r.color));
    CHECK(r.num_colors <= 19); // Delta + 1 fallback
    CHECK(r.num_colors == 7);  // recorded from a verified run; happens to be optimal here
}

TEST_CASE("dsatur is deterministic") {
    const auto g = graphs::build_graph(Family::grassmann, 3, 4, 2);
    const auto a = oracle::greedy_dsatur(*g.bits);
    const auto b = oracle::greedy_dsatur(*g.bits);
    CHECK(a.color == b.color);
    CHECK(a.num_colors == b.num_colors);
}

TEST_CASE("max clique basics") {
    const BitGraph edgeless(4);
    const auto r0 = oracle::max_clique(edgeless);
    CHECK(r0.members.size() == 1);

    const auto k7 = testutil::complete_graph(7);
    CHECK(oracle::max_clique(k7).members.size() == 7);

    const auto c5 = testutil::cycle_graph(5);
    CHECK(oracle::max_clique(c5).members.size() == 2);
}

TEST_CASE("max clique rediscovers pencils on J_2(4,2)") {
    const auto g = graphs::build_graph(Family::grassmann, 2, 4, 2);
    const auto r = oracle::max_clique(*g.bits);
    CHECK(!r.budget_hit);
    CHECK(r.members.size() >= 7);
    for (std::size_t i = 0; i < r.members.size(); ++i)
        for (std::size_t j = i + 1; j < r.members.size(); ++j)
            CHECK(g.bits->test(r.members[i], r.members[j]));

    // warm start cannot make the result worse
    const auto t = linalg::all_subspaces(4, 1, *g.field).front();
    std::vector<std::size_t> seed;
    for (const auto& s : graphs::pencil_clique(t, *g.field))
        for (std::size_t i = 0; i < g.subspaces.size(); ++i)
            if (g.subspaces[i] == s) seed.push_back(i);
    REQUIRE(seed.size() == 7);
    CHECK(oracle::max_clique(*g.bits, oracle::kDefaultNodeBudget, seed).members.size() >= 7);
}

TEST_CASE("max clique respects its node budget") {
    const auto g = graphs::build_graph(Family::grassmann, 2, 6, 2);
    const auto r = oracle::max_clique(*g.bits, 50);
    CHECK(r.budget_hit);
    CHECK(r.nodes_expanded <= 51);
    // best-so-far is still a clique
    for (std::size_t i = 0; i < r.members.size(); ++i)
        for (std::size_t j = i + 1; j < r.members.size(); ++j)
            CHECK(g.bits->test(r.members[i], r.members[j]));
}

TEST_CASE("exact chromatic numbers on hand graphs") {
    const auto c5 = testutil::cycle_graph(5);
    CHECK(oracle::exact_chromatic(c5).exact == 3);

    const BitGraph edgeless(6);
    CHECK(oracle::exact_chromatic(edgeless).exact == 1);

    const auto petersen = testutil::petersen_graph();
    CHECK(oracle::exact_chromatic(petersen).exact == 3);
}

TEST_CASE("exact chromatic number of the line graphs") {
    const auto k7 = graphs::build_graph(Family::grassmann, 2, 3, 2);
    const auto b7 = oracle::exact_chromatic(*k7.bits);
    CHECK(b7.exact == 7);

    const auto g = graphs::build_graph(Family::grassmann, 2, 4, 2);
    const auto b = oracle::exact_chromatic(*g.bits);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == 7);
    CHECK(b.lower <= 7);
    CHECK(b.upper >= 7);
}

TEST_CASE("oracle agrees with brute force on graphs up to 12 vertices") {
    std::vector<BitGraph> corpus;
    corpus.push_back(BitGraph(0));
    corpus.push_back(BitGraph(1));
    corpus.push_back(BitGraph(5));
    corpus.push_back(testutil::path_graph(6));
    corpus.push_back(testutil::cycle_graph(5));
    corpus.push_back(testutil::cycle_graph(6));
    corpus.push_back(testutil::complete_graph(4));
    corpus.push_back(testutil::complete_graph(7));
    corpus.push_back(testutil::petersen_graph());

    // wheel on 8 vertices: odd rim forces 4 colors
    BitGraph wheel(8);
    for (std::size_t i = 0; i < 7; ++i) {
        wheel.add_edge(i, (i + 1) % 7);
        wheel.add_edge(i, 7);
    }
    corpus.push_back(wheel);

    // K_{3,3}
    BitGraph k33(6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) k33.add_edge(i, j);
    corpus.push_back(k33);

    // the octahedron J(4,2)
    {
        const auto j42 = graphs::build_graph(Family::johnson, 0, 4, 2);
        corpus.push_back(*j42.bits);
    }

    // a fixed pseudorandom 12-vertex graph
    {
        BitGraph g(12);
        auto rng = testutil::make_rng(99);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = i + 1; j < 12; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        corpus.push_back(g);
    }

    for (const auto& g : corpus) {
        REQUIRE(g.n <= 12);
        const auto bounds = oracle::exact_chromatic(g);
        REQUIRE(bounds.exact.has_value());
        if (g.n == 0) {
            CHECK(*bounds.exact == 0);
            continue;
        }
        CHECK(*bounds.exact == testutil::brute_chromatic(g));
    }
}

TEST_CASE("exact solver rejects oversized graphs and reports budget exhaustion") {
    const auto g = graphs::build_graph(Family::grassmann, 2, 5, 2); // 155 vertices
    CHECK_THROWS_AS(oracle::exact_chromatic(*g.bits), Error);

    const auto small = graphs::build_graph(Family::grassmann, 2, 4, 2);
    const auto starved = oracle::exact_chromatic(*small.bits, 40);
    if (!starved.exact) {
        CHECK(starved.budget_hit);
        CHECK(starved.lower <= starved.upper);
    }
}

TEST_CASE("sandwich: oracle lower bound never exceeds constructive colorings") {
    for (auto [q, n] : {std::pair<int, int>{2, 4}, {4, 4}}) {
        std::uint32_t p, e;
        gf::factor_prime_power(q, p, e);
        const auto g = graphs::build_graph(Family::grassmann, q, n, 2);
        const auto clique = oracle::max_clique(*g.bits);
        const gf::FieldCtx moore_ctx = gf::make_ctx(p, e, n);
        const auto moore = colorings::color_graph(g, colorings::Method::moore, &moore_ctx);
        const gf::FieldCtx hawtin_ctx = gf::make_ctx(2, e, n - 1);
        const auto hawtin = colorings::color_graph(g, colorings::Method::hawtin, &hawtin_ctx);
        const auto rm = colorings::verify_coloring(g, moore);
        const auto rh = colorings::verify_coloring(g, hawtin);
        CHECK(clique.members.size() <= rm.colors_used);
        CHECK(clique.members.size() <= rh.colors_used);
    }
}
