#include <doctest.h>

#include <algorithm>

#include "grcol/runner.hpp"
#include "test_util.hpp"

using namespace grcol;
using runner::Format;
using runner::RunConfig;

TEST_CASE("info reports the formula table") {
    RunConfig cfg;
    cfg.q = 2;
    cfg.n = 4;
    cfg.m = 2;
    const auto r = runner::run_info(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.report["vertices"] == 35);
    CHECK(r.report["valency"] == 18);
    CHECK(r.report["pencil_bound"] == 7);
    CHECK(r.report["coset_bound"] == 15);
    CHECK(r.report["hawtin_palette"] == 7);
    CHECK(r.report["hawtin_strict_bound"] == 14);

    cfg.q = 4;
    const auto r4 = runner::run_info(cfg);
    CHECK(r4.report["vertices"] == 357);
    CHECK(r4.report["valency"] == 100);
    CHECK(r4.report["pencil_bound"] == 21);
    CHECK(r4.report["coset_bound"] == 85);
    CHECK(r4.report["hawtin_palette"] == 31);
    CHECK(r4.report["hawtin_strict_bound"] == 42);

    cfg.q = 3; // odd characteristic: no hawtin fields
    const auto r3 = runner::run_info(cfg);
    CHECK(!r3.report.contains("hawtin_palette"));

    cfg.m = 4; // m = n rejected
    CHECK_THROWS_AS(runner::run_info(cfg), Error);
}

TEST_CASE("color command reports and exit codes") {
    RunConfig cfg;
    cfg.q = 2;
    cfg.n = 4;
    cfg.m = 2;
    cfg.method = colorings::Method::moore;
    const auto r = runner::run_color(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.report["valid"] == true);
    CHECK(r.report["graph"]["family"] == "grassmann");
    CHECK(r.report["graph"]["vertices"] == 35);
    CHECK(r.report["colors_used"] <= 15);
    CHECK(r.report["lower_bound"] == 7);
    CHECK(!r.report.contains("witness_edge"));
    // the tower behind the coset identification is recorded
    CHECK(r.report["tower"]["p"] == 2);
    CHECK(r.report["tower"]["d"] == 4);
    CHECK(r.report["tower"]["mod_top"] == runner::Json::array({1, 1, 0, 0, 1})); // y^4+y+1
    // classes carry spread verdicts for line colorings and a dense renumbering
    CHECK(r.report["classes"].size() == r.report["colors_used"]);
    std::size_t expect_index = 0;
    for (const auto& cls : r.report["classes"]) {
        CHECK(cls["index"] == expect_index++);
        CHECK(cls.contains("is_partial_spread"));
        CHECK(cls.contains("is_spread"));
    }
}

TEST_CASE("hawtin config validation") {
    RunConfig cfg;
    cfg.method = colorings::Method::hawtin;
    cfg.q = 3;
    cfg.n = 4;
    cfg.m = 2;
    CHECK_THROWS_AS(runner::run_color(cfg), Error);
    try {
        runner::run_color(cfg);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::odd_characteristic);
        CHECK(runner::exit_code_for(e) == 2);
    }

    cfg.q = 4;
    cfg.n = 5; // odd n
    CHECK_THROWS_AS(runner::run_color(cfg), Error);

    cfg.n = 4;
    const auto ok = runner::run_color(cfg);
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["valid"] == true);
}

TEST_CASE("johnson and kneser methods run end to end") {
    RunConfig cfg;
    cfg.method = colorings::Method::johnson_sum;
    cfg.n = 6;
    cfg.m = 3;
    const auto rj = runner::run_color(cfg);
    CHECK(rj.exit_code == 0);
    CHECK(rj.report["graph"]["family"] == "johnson");
    CHECK(!rj.report["graph"].contains("q"));
    CHECK(rj.report["colors_used"] <= 6);

    cfg.method = colorings::Method::kneser_point;
    cfg.q = 2;
    cfg.n = 5;
    cfg.m = 2;
    const auto rk = runner::run_color(cfg);
    CHECK(rk.exit_code == 0);
    CHECK(rk.report["graph"]["family"] == "qkneser");
    CHECK(rk.report["palette_bound"] == 15);

    cfg.q = 3; // binary construction only
    CHECK_THROWS_AS(runner::run_color(cfg), Error);
}

TEST_CASE("csv export shape") {
    RunConfig cfg;
    cfg.q = 2;
    cfg.n = 3;
    cfg.m = 2;
    cfg.method = colorings::Method::moore;
    cfg.format = Format::csv;
    const auto r = runner::run_color(cfg);
    CHECK(r.rendered.substr(0, 36) == "vertex_index,vertex_rref,color_code\n");
    CHECK(std::count(r.rendered.begin(), r.rendered.end(), '\n') == 8); // header + 7 vertices
    CHECK(r.rendered.find("0,\"") != std::string::npos);

    // csv is a color-only format
    CHECK_THROWS_AS(runner::run_bounds(cfg), Error);
}

TEST_CASE("bounds command") {
    RunConfig cfg;
    cfg.q = 2;
    cfg.n = 4;
    cfg.m = 2;
    cfg.exact = true;
    const auto r = runner::run_bounds(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.report["exact"] == 7);
    CHECK(r.report["pencil_bound"] == 7);
    CHECK(r.report["coset_bound"] == 15);
    CHECK(r.report["graph"]["edges"] == 315);
    CHECK(r.report["graph"]["regular_degree"] == 18);

    cfg.q = 3;
    cfg.exact = false;
    const auto r3 = runner::run_bounds(cfg);
    CHECK(r3.report["lower"].get<std::uint64_t>() >= 13);
    CHECK(r3.report["pencil_bound"] == 13);

    // the pencil warm start keeps the clique bound at binom(n-m+1,1)_q and
    // DSATUR stays within the trivial valency+1 bound
    cfg.q = 4;
    const auto r4 = runner::run_bounds(cfg);
    CHECK(r4.report["lower"].get<std::uint64_t>() >= 21);
    CHECK(r4.report["upper"].get<std::uint64_t>() <= 101);

    // exact on an oversized instance is a cap error
    cfg.q = 2;
    cfg.n = 5;
    cfg.exact = true;
    try {
        runner::run_bounds(cfg);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(runner::exit_code_for(e) == 3);
    }
}

TEST_CASE("induced command at q=2 n=4 collapses to K_7") {
    RunConfig cfg;
    cfg.q = 2;
    cfg.n = 4;
    const auto r = runner::run_induced(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.report["image_vertices"] == 7);
    CHECK(r.report["clique_lower"] == 7);
    CHECK(r.report["greedy_upper"] == 7);
    CHECK(r.report["pencil_bound"] == 7);
    CHECK(r.report["kneser_ambient"] == 3);
    CHECK(r.report["source_lines"] == 35);

    cfg.q = 3;
    CHECK_THROWS_AS(runner::run_induced(cfg), Error);
    cfg.q = 2;
    cfg.n = 5;
    CHECK_THROWS_AS(runner::run_induced(cfg), Error);
}

TEST_CASE("reports are byte-identical across runs") {
    RunConfig cfg;
    cfg.q = 4;
    cfg.n = 4;
    cfg.m = 2;
    cfg.method = colorings::Method::hawtin;
    const auto a = runner::run_color(cfg);
    const auto b = runner::run_color(cfg);
    CHECK(a.rendered == b.rendered);

    const auto ia = runner::run_induced(cfg);
    const auto ib = runner::run_induced(cfg);
    CHECK(ia.rendered == ib.rendered);
}
