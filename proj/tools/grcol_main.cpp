// grcol — construct, verify, and bound colorings of Grassmann, q-Kneser,
// and Johnson graphs at desk scale.
//
// Commands: info | color | bounds | induced. JSON output is the stable
// contract; identical invocations produce byte-identical reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grcol/runner.hpp"

namespace {

using grcol::runner::Format;
using grcol::runner::RunConfig;
using grcol::runner::RunResult;

int write_output(const RunResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.rendered;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 2;
        }
        f << result.rendered;
    }
    return result.exit_code;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "table") return Format::table;
    grcol::fail(grcol::Errc::config_error, "unknown format: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colorings of Grassmann graphs over finite fields"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method_name = "moore";
    std::string format_name = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool need_q, bool need_m) {
        auto* q = cmd->add_option("--q", cfg.q, "field order (prime power)");
        if (need_q) q->required();
        cmd->add_option("--n", cfg.n, "ambient dimension")->required();
        auto* m = cmd->add_option("--m", cfg.m, "subspace dimension");
        if (need_m) m->required();
        cmd->add_option("--format", format_name, "output format: json|csv|table");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--enum-cap", cfg.enum_cap, "refuse enumerations beyond this many subspaces");
        cmd->add_option("--exact-cap", cfg.exact_cap, "largest graph the exact solver accepts");
        cmd->add_option("--node-budget", cfg.node_budget, "search-node budget for clique/chromatic search");
    };

    auto* info = app.add_subcommand("info", "formula table for (q, n, m); no enumeration");
    add_common(info, true, true);

    auto* color = app.add_subcommand("color", "run a constructive coloring and verify it");
    add_common(color, false, false);
    color->add_option("--method", method_name, "moore|hawtin|kneser_point|johnson_sum")->required();

    auto* bounds = app.add_subcommand("bounds", "clique/DSATUR bounds, optionally exact");
    add_common(bounds, true, true);
    bounds->add_flag("--exact", cfg.exact, "run the exact chromatic solver");

    auto* induced = app.add_subcommand("induced", "image subgraph experiment for q = 2^e, even n");
    add_common(induced, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.format = parse_format(format_name);
        RunResult result;
        if (info->parsed()) {
            result = grcol::runner::run_info(cfg);
        } else if (color->parsed()) {
            const auto method = grcol::colorings::method_from_name(method_name);
            if (!method) grcol::fail(grcol::Errc::config_error, "unknown method: " + method_name);
            cfg.method = *method;
            if (cfg.m == 0) {
                if (cfg.method != grcol::colorings::Method::hawtin)
                    grcol::fail(grcol::Errc::config_error, "--m is required for this method");
                cfg.m = 2;
            }
            result = grcol::runner::run_color(cfg);
        } else if (bounds->parsed()) {
            result = grcol::runner::run_bounds(cfg);
        } else {
            if (cfg.m == 0) cfg.m = 2;
            result = grcol::runner::run_induced(cfg);
        }
        return write_output(result, out_path);
    } catch (const grcol::Error& e) {
        std::cerr << "error [" << grcol::errc_name(e.code()) << "]: " << e.what() << "\n";
        return grcol::runner::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
