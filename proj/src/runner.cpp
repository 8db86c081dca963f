#include "grcol/runner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace grcol::runner {

namespace {

using colorings::Method;
using graphs::Family;

Json json_big(const linalg::BigInt& v) {
    // JSON numbers are exact up to 2^53; larger values go out as strings
    if (v >= 0 && v <= (linalg::BigInt(1) << 53)) return static_cast<std::uint64_t>(v);
    return v.str();
}

void require(bool cond, const std::string& what) {
    if (!cond) fail(Errc::config_error, what);
}

struct MethodSetup {
    Family family = Family::grassmann;
    std::optional<gf::FieldCtx> ctx;
};

// Validates (q, n, m) against the method and builds the field tower the
// method needs.
MethodSetup setup_for(const RunConfig& cfg) {
    MethodSetup s;
    require(cfg.n >= 1, "n must be positive");
    require(cfg.m >= 1, "m must be positive");
    switch (cfg.method) {
        case Method::moore: {
            std::uint32_t p = 0, e = 0;
            gf::factor_prime_power(cfg.q, p, e);
            require(cfg.m < cfg.n, "moore coloring requires m < n");
            s.family = Family::grassmann;
            s.ctx = gf::make_ctx(p, e, static_cast<std::uint32_t>(cfg.n));
            break;
        }
        case Method::hawtin: {
            std::uint32_t p = 0, e = 0;
            gf::factor_prime_power(cfg.q, p, e);
            if (p != 2) fail(Errc::odd_characteristic, "hawtin coloring requires q = 2^e");
            if (cfg.n % 2 != 0) fail(Errc::odd_n, "hawtin coloring requires even n");
            require(cfg.m == 2, "hawtin coloring targets m = 2");
            s.family = Family::grassmann;
            s.ctx = gf::make_ctx(2, e, static_cast<std::uint32_t>(cfg.n - 1));
            break;
        }
        case Method::kneser_point:
            require(cfg.q == 2, "kneser_point coloring requires q = 2");
            require(cfg.m <= cfg.n, "kneser_point coloring requires m <= n");
            s.family = Family::qkneser;
            break;
        case Method::johnson_sum:
            require(cfg.m <= cfg.n, "johnson_sum coloring requires m <= n");
            s.family = Family::johnson;
            break;
    }
    return s;
}

Json graph_json(const graphs::GraphHandle& g) {
    Json j;
    j["family"] = graphs::family_name(g.family);
    if (g.family != Family::johnson) j["q"] = g.q;
    j["n"] = g.n;
    j["m"] = g.m;
    j["vertices"] = g.num_vertices();
    return j;
}

Json graph_summary_json(const graphs::GraphHandle& g) {
    Json j = graph_json(g);
    if (g.edges) j["edges"] = *g.edges;
    j["regular_degree"] = g.regular_degree ? Json(*g.regular_degree) : Json(nullptr);
    return j;
}

std::string csv_quote_rows(const graphs::GraphHandle& g, std::size_t i) {
    std::ostringstream os;
    if (g.family == Family::johnson) {
        const auto& sub = g.subsets[i];
        for (std::size_t k = 0; k < sub.size(); ++k) os << (k ? "," : "") << sub[k];
    } else {
        const auto& s = g.subspaces[i];
        for (std::size_t k = 0; k < s.rows.size(); ++k) os << (k ? "," : "") << s.rows[k];
    }
    return os.str();
}

std::string render_color_csv(const graphs::GraphHandle& g, const colorings::Coloring& c) {
    std::ostringstream os;
    os << "vertex_index,vertex_rref,color_code\n";
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        os << i << ",\"" << csv_quote_rows(g, i) << "\"," << c.color_of[i] << "\n";
    return os.str();
}

std::string render_color_table(const colorings::ColoringReport& r) {
    std::ostringstream os;
    os << "method        " << colorings::method_name(r.method) << "\n";
    os << "graph         " << graphs::family_name(r.family);
    if (r.family != Family::johnson) os << " q=" << r.q;
    os << " n=" << r.n << " m=" << r.m << " (" << r.vertices << " vertices)\n";
    os << "valid         " << (r.valid ? "yes" : "no") << "\n";
    if (r.witness_edge)
        os << "witness edge  (" << r.witness_edge->first << ", " << r.witness_edge->second << ")\n";
    os << "colors used   " << r.colors_used << " (palette " << r.palette_bound << ", clique lower "
       << r.lower_bound << ")\n";
    os << "classes       color/size";
    if (!r.classes.empty() && r.classes.front().spread) os << "/partial_spread/spread";
    os << "\n";
    for (const auto& cls : r.classes) {
        os << "  " << cls.color << "/" << cls.size;
        if (cls.spread) os << "/" << (cls.spread->is_partial_spread ? "y" : "n") << "/"
                           << (cls.spread->is_spread ? "y" : "n");
        os << "\n";
    }
    return os.str();
}

std::string render_kv_table(const Json& j) {
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) os << key << "\t" << value.dump() << "\n";
    return os.str();
}

} // namespace

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::size_limit_exceeded:
        case Errc::budget_exceeded:
            return 3;
        default:
            return 2;
    }
}

Json coloring_report_json(const colorings::ColoringReport& r) {
    Json j;
    j["method"] = colorings::method_name(r.method);
    Json graph;
    graph["family"] = graphs::family_name(r.family);
    if (r.family != Family::johnson) graph["q"] = r.q;
    graph["n"] = r.n;
    graph["m"] = r.m;
    graph["vertices"] = r.vertices;
    j["graph"] = graph;
    j["valid"] = r.valid;
    j["colors_used"] = r.colors_used;
    j["palette_bound"] = r.palette_bound;
    j["lower_bound"] = r.lower_bound;
    Json classes = Json::array();
    std::size_t dense = 0;
    for (const auto& cls : r.classes) {
        Json c;
        c["index"] = dense++; // dense renumbering; colors stay raw codes
        c["color"] = cls.color;
        c["size"] = cls.size;
        if (cls.spread) {
            c["is_partial_spread"] = cls.spread->is_partial_spread;
            c["is_spread"] = cls.spread->is_spread;
        }
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    if (r.witness_edge) j["witness_edge"] = Json::array({r.witness_edge->first, r.witness_edge->second});
    return j;
}

Json tower_json(const gf::FieldCtx& ctx) {
    Json j;
    j["p"] = ctx.p();
    j["e"] = ctx.e();
    j["d"] = ctx.d();
    j["mod_base"] = ctx.mod_base();
    j["mod_top"] = ctx.mod_top();
    return j;
}

RunResult run_color(const RunConfig& cfg) {
    MethodSetup setup = setup_for(cfg);
    graphs::BuildCaps caps;
    caps.enum_cap = cfg.enum_cap;
    const graphs::GraphHandle g = graphs::build_graph(setup.family, setup.family == Family::johnson ? 0 : cfg.q,
                                                      cfg.n, cfg.m, caps);
    const colorings::Coloring c =
        colorings::color_graph(g, cfg.method, setup.ctx ? &*setup.ctx : nullptr);
    const colorings::ColoringReport report = colorings::verify_coloring(g, c);

    RunResult out;
    out.report = coloring_report_json(report);
    // the coloring depends on the tower's basis choice; record it
    if (setup.ctx) out.report["tower"] = tower_json(*setup.ctx);
    out.exit_code = report.valid ? 0 : 1;
    switch (cfg.format) {
        case Format::json: out.rendered = out.report.dump(2) + "\n"; break;
        case Format::csv: out.rendered = render_color_csv(g, c); break;
        case Format::table: out.rendered = render_color_table(report); break;
    }
    return out;
}

RunResult run_bounds(const RunConfig& cfg) {
    require(cfg.format != Format::csv, "csv format is only available for the color command");
    std::uint32_t p = 0, e = 0;
    gf::factor_prime_power(cfg.q, p, e);
    require(cfg.n >= 1 && cfg.m >= 1 && cfg.m < cfg.n, "bounds requires 1 <= m < n");

    graphs::BuildCaps caps;
    caps.enum_cap = cfg.enum_cap;
    const graphs::GraphHandle g = graphs::build_graph(Family::grassmann, cfg.q, cfg.n, cfg.m, caps);
    if (!g.bits) fail(Errc::size_limit_exceeded, "bounds: graph too large to materialize");

    // warm start with the pencil through the first (m-1)-space
    std::vector<std::size_t> seed;
    if (cfg.m >= 2) {
        const auto t = linalg::all_subspaces(cfg.n, cfg.m - 1, *g.field, cfg.enum_cap).front();
        std::map<linalg::Subspace, std::size_t, linalg::EnumOrderLess> index;
        for (std::size_t i = 0; i < g.subspaces.size(); ++i) index.emplace(g.subspaces[i], i);
        for (const auto& s : graphs::pencil_clique(t, *g.field)) seed.push_back(index.at(s));
    }

    const oracle::CliqueResult clique = oracle::max_clique(*g.bits, cfg.node_budget, seed);
    const oracle::DsaturResult dsatur = oracle::greedy_dsatur(*g.bits);

    Json j;
    j["command"] = "bounds";
    j["graph"] = graph_summary_json(g);
    j["lower"] = clique.members.size();
    j["upper"] = dsatur.num_colors;
    std::uint64_t nodes = clique.nodes_expanded;
    bool budget_hit = clique.budget_hit;
    if (cfg.exact) {
        if (g.num_vertices() > cfg.exact_cap)
            fail(Errc::size_limit_exceeded, "bounds --exact: graph exceeds the exact cap");
        const oracle::ChromaticBounds b =
            oracle::exact_chromatic(*g.bits, cfg.node_budget, cfg.exact_cap);
        if (b.exact) j["exact"] = *b.exact;
        j["lower"] = std::max<std::uint64_t>(j["lower"].get<std::uint64_t>(), b.lower);
        j["upper"] = std::min<std::uint64_t>(j["upper"].get<std::uint64_t>(), b.upper);
        nodes += b.nodes_expanded;
        budget_hit = budget_hit || b.budget_hit;
    }
    j["nodes_expanded"] = nodes;
    j["budget_hit"] = budget_hit;
    j["pencil_bound"] = json_big(linalg::gaussian_binomial(cfg.n - cfg.m + 1, 1, cfg.q));
    j["coset_bound"] = json_big(linalg::gaussian_binomial(cfg.n, 1, cfg.q));

    RunResult out;
    out.report = j;
    out.exit_code = 0;
    out.rendered = cfg.format == Format::table ? render_kv_table(j) : j.dump(2) + "\n";
    return out;
}

RunResult run_induced(const RunConfig& cfg) {
    require(cfg.format != Format::csv, "csv format is only available for the color command");
    std::uint32_t p = 0, e = 0;
    gf::factor_prime_power(cfg.q, p, e);
    if (p != 2) fail(Errc::odd_characteristic, "induced requires q = 2^e");
    if (cfg.n % 2 != 0) fail(Errc::odd_n, "induced requires even n");

    const gf::FieldCtx ctx = gf::make_ctx(2, e, static_cast<std::uint32_t>(cfg.n - 1));
    const gf::Gf& fq = ctx.mid();
    static const gf::Gf f2(2, 1);

    // image subspaces of all 2-spaces of V, deduplicated and canonically
    // ordered
    std::map<linalg::Subspace, std::size_t, linalg::EnumOrderLess> image_index;
    const std::vector<linalg::Subspace> lines = linalg::all_subspaces(cfg.n, 2, fq, cfg.enum_cap);
    std::vector<std::size_t> line_image(lines.size());
    std::vector<linalg::Subspace> images;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto x = colorings::vpoint_from_row(lines[i].row(0), ctx);
        const auto y = colorings::vpoint_from_row(lines[i].row(1), ctx);
        linalg::Subspace img = colorings::hawtin_image(x, y, ctx).as_subspace;
        auto [it, inserted] = image_index.emplace(std::move(img), image_index.size());
        line_image[i] = it->second;
        if (inserted) images.push_back(it->first);
    }
    // map insertion ids to canonical-order ids
    std::vector<std::size_t> canonical_id(images.size());
    {
        std::size_t next = 0;
        for (const auto& [img, id] : image_index) canonical_id[id] = next++;
    }
    std::vector<linalg::Subspace> vertices(images.size());
    for (const auto& [img, id] : image_index) vertices[canonical_id[id]] = img;

    graphs::GraphHandle g;
    g.family = Family::qkneser;
    g.q = 2;
    g.n = static_cast<int>((cfg.n - 1) * e);
    g.m = static_cast<int>(e);
    g.field = std::make_shared<gf::Gf>(2, 1);
    g.subspaces = std::move(vertices);
    const std::size_t V = g.num_vertices();
    graphs::BitGraph bits(V);
    for (std::size_t i = 0; i < V; ++i)
        for (std::size_t j = i + 1; j < V; ++j)
            if (graphs::kneser_adjacent(g.subspaces[i], g.subspaces[j], f2)) bits.add_edge(i, j);
    g.edges = bits.edge_count();
    g.bits = std::move(bits);

    // the images of the pencil through the first point of V form a clique
    std::vector<std::size_t> seed;
    {
        const linalg::Subspace first_point = linalg::all_subspaces(cfg.n, 1, fq, cfg.enum_cap).front();
        std::map<linalg::Subspace, std::size_t, linalg::EnumOrderLess> line_ids;
        for (std::size_t i = 0; i < lines.size(); ++i) line_ids.emplace(lines[i], i);
        std::set<std::size_t> seen;
        for (const auto& l : graphs::pencil_clique(first_point, fq))
            seen.insert(canonical_id[line_image[line_ids.at(l)]]);
        seed.assign(seen.begin(), seen.end());
    }

    const oracle::CliqueResult clique = oracle::max_clique(*g.bits, cfg.node_budget, seed);
    const oracle::DsaturResult dsatur = oracle::greedy_dsatur(*g.bits);

    Json j;
    j["command"] = "induced";
    j["q"] = cfg.q;
    j["n"] = cfg.n;
    j["e"] = e;
    j["kneser_ambient"] = (cfg.n - 1) * static_cast<int>(e);
    j["kneser_m"] = e;
    j["kneser_vertices_total"] = json_big(linalg::gaussian_binomial((cfg.n - 1) * e, e, 2));
    j["source_lines"] = lines.size();
    j["image_vertices"] = V;
    j["image_edges"] = *g.edges;
    j["clique_lower"] = clique.members.size();
    j["clique_budget_hit"] = clique.budget_hit;
    j["greedy_upper"] = dsatur.num_colors;
    j["nodes_expanded"] = clique.nodes_expanded;
    j["pencil_bound"] = json_big(linalg::gaussian_binomial(cfg.n - 1, 1, cfg.q));

    RunResult out;
    out.report = j;
    out.exit_code = 0;
    out.rendered = cfg.format == Format::table ? render_kv_table(j) : j.dump(2) + "\n";
    return out;
}

RunResult run_info(const RunConfig& cfg) {
    require(cfg.format != Format::csv, "csv format is only available for the color command");
    std::uint32_t p = 0, e = 0;
    gf::factor_prime_power(cfg.q, p, e);
    require(cfg.n >= 1 && cfg.m >= 1 && cfg.m < cfg.n, "info requires 1 <= m < n");

    Json j;
    j["command"] = "info";
    j["q"] = cfg.q;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["vertices"] = json_big(linalg::gaussian_binomial(cfg.n, cfg.m, cfg.q));
    j["valency"] = json_big(graphs::valency(cfg.q, cfg.n, cfg.m));
    j["pencil_bound"] = json_big(linalg::gaussian_binomial(cfg.n - cfg.m + 1, 1, cfg.q));
    j["coset_bound"] = json_big(linalg::gaussian_binomial(cfg.n, 1, cfg.q));
    if (p == 2 && cfg.n % 2 == 0 && cfg.m == 2) {
        const int ne = cfg.n * static_cast<int>(e);
        j["hawtin_palette"] = json_big(linalg::gaussian_binomial(ne - 2 * static_cast<int>(e) + 1, 1, 2));
        j["hawtin_strict_bound"] = json_big(2 * linalg::gaussian_binomial(cfg.n - 1, 1, cfg.q));
    }

    RunResult out;
    out.report = j;
    out.exit_code = 0;
    out.rendered = cfg.format == Format::table ? render_kv_table(j) : j.dump(2) + "\n";
    return out;
}

} // namespace grcol::runner
