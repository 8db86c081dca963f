#include "grcol/colorings.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace grcol::colorings {

const char* method_name(Method m) {
    switch (m) {
        case Method::moore: return "moore";
        case Method::hawtin: return "hawtin";
        case Method::kneser_point: return "kneser_point";
        case Method::johnson_sum: return "johnson_sum";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "moore") return Method::moore;
    if (name == "hawtin") return Method::hawtin;
    if (name == "kneser_point") return Method::kneser_point;
    if (name == "johnson_sum") return Method::johnson_sum;
    return std::nullopt;
}

linalg::ProjectivePoint moore_color_from_basis(std::span<const linalg::Vec> basis_rows,
                                               const gf::FieldCtx& ctx) {
    std::vector<gf::FieldElement> lifted;
    lifted.reserve(basis_rows.size());
    for (const auto& row : basis_rows)
        lifted.push_back(ctx.from_coeffs(gf::Level::top, {row.begin(), row.end()}));
    const gf::FieldElement det = ctx.moore_det(lifted);
    // det vanishes only on dependent tuples, impossible for a basis
    return linalg::normalize_projective(linalg::flatten(det, ctx), ctx.mid());
}

linalg::ProjectivePoint moore_color(const linalg::Subspace& s, const gf::FieldCtx& ctx) {
    if (s.ambient != static_cast<int>(ctx.d()))
        fail(Errc::ambient_mismatch, "moore_color: ambient dimension must equal the top degree");
    std::vector<linalg::Vec> rows;
    rows.reserve(s.dim);
    for (int i = 0; i < s.dim; ++i) rows.emplace_back(s.row(i).begin(), s.row(i).end());
    return moore_color_from_basis(rows, ctx);
}

linalg::ProjectivePoint kneser_point_color(const linalg::Subspace& s, int m) {
    if (s.dim != m) fail(Errc::param_mismatch, "kneser_point_color: dim s != m");
    const int N = s.ambient;
    // U = span{e_1..e_{N-m+1}}: vectors whose last m-1 coordinates vanish.
    // Walk the 2^m - 1 nonzero combinations of the basis rows.
    std::optional<linalg::Vec> best;
    linalg::Vec v(N);
    for (std::uint32_t mask = 1; mask < (1u << s.dim); ++mask) {
        std::fill(v.begin(), v.end(), 0);
        for (int i = 0; i < s.dim; ++i)
            if (mask & (1u << i))
                for (int j = 0; j < N; ++j) v[j] ^= s.row(i)[j];
        bool in_u = true;
        for (int j = N - m + 1; j < N && in_u; ++j) in_u = v[j] == 0;
        if (!in_u) continue;
        if (!best || linalg::lex_less(v, *best)) best = v;
    }
    // dim(s ∩ U) ≥ m + (N-m+1) - N = 1
    assert(best.has_value());
    return linalg::ProjectivePoint{std::move(*best)};
}

VPoint vpoint_from_row(std::span<const std::uint32_t> row, const gf::FieldCtx& ctx) {
    if (row.size() != ctx.d() + 1) fail(Errc::param_mismatch, "vpoint_from_row: wrong length");
    std::vector<std::uint32_t> coeffs(row.begin(), row.end() - 1);
    return VPoint{ctx.from_coeffs(gf::Level::top, std::move(coeffs)), row.back()};
}

linalg::Vec row_from_vpoint(const VPoint& v, const gf::FieldCtx& ctx) {
    linalg::Vec row = linalg::flatten(v.field_part, ctx);
    row.push_back(v.scalar);
    return row;
}

gf::FieldElement hawtin_g(const VPoint& x, const VPoint& y, const gf::FieldCtx& ctx) {
    const auto& X = x.field_part;
    const auto& Y = y.field_part;
    const gf::FieldElement cross = ctx.add(ctx.scale_top(x.scalar, Y), ctx.scale_top(y.scalar, X));
    const gf::FieldElement a_part = ctx.pow(cross, ctx.q() + 1);
    const gf::FieldElement b_part =
        ctx.add(ctx.mul(X, ctx.frobenius(Y, 1)), ctx.mul(ctx.frobenius(X, 1), Y));
    return ctx.add(a_part, b_part);
}

EImage hawtin_image(const VPoint& x, const VPoint& y, const gf::FieldCtx& ctx) {
    if (ctx.p() != 2) fail(Errc::odd_characteristic, "hawtin_image: q must be a power of 2");
    if (ctx.d() % 2 == 0) fail(Errc::odd_n, "hawtin_image: the ambient dimension d+1 must be even");

    // independence of x̄, ȳ over F_q
    linalg::FqMatrix pair(2, static_cast<int>(ctx.d()) + 1);
    const linalg::Vec rx = row_from_vpoint(x, ctx);
    const linalg::Vec ry = row_from_vpoint(y, ctx);
    std::copy(rx.begin(), rx.end(), pair.a.begin());
    std::copy(ry.begin(), ry.end(), pair.a.begin() + rx.size());
    if (linalg::rank(pair, ctx.mid()) < 2)
        fail(Errc::dependent_pair, "hawtin_image: x and y are F_q-dependent");

    EImage img;
    const auto& X = x.field_part;
    const auto& Y = y.field_part;
    const gf::FieldElement cross = ctx.add(ctx.scale_top(x.scalar, Y), ctx.scale_top(y.scalar, X));
    img.A = ctx.pow(cross, ctx.q() + 1);
    img.B = ctx.add(ctx.mul(X, ctx.frobenius(Y, 1)), ctx.mul(ctx.frobenius(X, 1), Y));

    img.members.reserve(ctx.q());
    for (std::uint32_t alpha = 0; alpha < ctx.q(); ++alpha) {
        const std::uint32_t alpha_sq = ctx.mid().mul(alpha, alpha);
        const gf::FieldElement member =
            ctx.add(ctx.scale_top(alpha_sq, img.A), ctx.scale_top(alpha, img.B));
        img.members.push_back(linalg::flatten_to_prime(member, ctx));
    }

    const int flat_dim = static_cast<int>(ctx.d() * ctx.e());
    linalg::FqMatrix stacked(static_cast<int>(img.members.size()), flat_dim);
    for (std::size_t i = 0; i < img.members.size(); ++i)
        std::copy(img.members[i].begin(), img.members[i].end(),
                  stacked.a.begin() + i * std::size_t(flat_dim));
    static const gf::Gf f2(2, 1);
    img.as_subspace = linalg::rref(stacked, f2);
    assert(img.as_subspace.dim == static_cast<int>(ctx.e()));
    return img;
}

linalg::ProjectivePoint hawtin_color(const linalg::Subspace& s, const gf::FieldCtx& ctx) {
    if (s.dim != 2) fail(Errc::bad_dim, "hawtin_color: expects 2-spaces");
    if (s.ambient != static_cast<int>(ctx.d()) + 1)
        fail(Errc::ambient_mismatch, "hawtin_color: ambient must be d+1");
    const VPoint x = vpoint_from_row(s.row(0), ctx);
    const VPoint y = vpoint_from_row(s.row(1), ctx);
    const EImage img = hawtin_image(x, y, ctx);
    return kneser_point_color(img.as_subspace, static_cast<int>(ctx.e()));
}

int johnson_sum_color(std::span<const int> subset, int n) {
    int sum = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > n || (i > 0 && subset[i] <= subset[i - 1]))
            fail(Errc::bad_subset, "johnson_sum_color: invalid subset");
        sum = (sum + subset[i]) % n;
    }
    return sum;
}

namespace {

std::uint64_t to_u64_or_fail(const linalg::BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max())
        fail(Errc::size_limit_exceeded, std::string(what) + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

} // namespace

Coloring color_graph(const graphs::GraphHandle& g, Method method, const gf::FieldCtx* ctx) {
    Coloring c;
    c.method = method;
    const std::size_t V = g.num_vertices();
    c.color_of.reserve(V);

    switch (method) {
        case Method::moore: {
            if (!ctx) fail(Errc::config_error, "moore coloring needs a field tower");
            if (g.family != graphs::Family::grassmann)
                fail(Errc::param_mismatch, "moore coloring targets Grassmann graphs");
            for (const auto& s : g.subspaces)
                c.color_of.push_back(linalg::vector_code(moore_color(s, *ctx).coords, ctx->q()));
            c.palette_bound = to_u64_or_fail(linalg::gaussian_binomial(g.n, 1, g.q), "palette");
            break;
        }
        case Method::hawtin: {
            if (!ctx) fail(Errc::config_error, "hawtin coloring needs a field tower");
            if (g.family != graphs::Family::grassmann || g.m != 2)
                fail(Errc::param_mismatch, "hawtin coloring targets J_q(n,2)");
            for (const auto& s : g.subspaces)
                c.color_of.push_back(linalg::vector_code(hawtin_color(s, *ctx).coords, 2));
            const int ne = g.n * static_cast<int>(ctx->e());
            c.palette_bound =
                to_u64_or_fail(linalg::gaussian_binomial(ne - 2 * static_cast<int>(ctx->e()) + 1, 1, 2),
                               "palette");
            break;
        }
        case Method::kneser_point: {
            if (g.family != graphs::Family::qkneser || g.q != 2)
                fail(Errc::param_mismatch, "kneser_point coloring targets binary Kneser graphs");
            for (const auto& s : g.subspaces)
                c.color_of.push_back(linalg::vector_code(kneser_point_color(s, g.m).coords, 2));
            c.palette_bound = to_u64_or_fail(linalg::gaussian_binomial(g.n - g.m + 1, 1, 2), "palette");
            break;
        }
        case Method::johnson_sum: {
            if (g.family != graphs::Family::johnson)
                fail(Errc::param_mismatch, "johnson_sum coloring targets Johnson graphs");
            for (const auto& sub : g.subsets)
                c.color_of.push_back(static_cast<std::uint64_t>(johnson_sum_color(sub, g.n)));
            c.palette_bound = static_cast<std::uint64_t>(g.n);
            break;
        }
    }
    return c;
}

ColoringReport verify_coloring(const graphs::GraphHandle& g, const Coloring& c) {
    const std::size_t V = g.num_vertices();
    if (c.color_of.size() != V) fail(Errc::param_mismatch, "verify_coloring: coloring is not total");

    ColoringReport r;
    r.method = c.method;
    r.family = g.family;
    r.q = g.q;
    r.n = g.n;
    r.m = g.m;
    r.vertices = V;
    r.palette_bound = c.palette_bound;

    r.valid = true;
    for (std::size_t i = 0; i < V && r.valid; ++i)
        for (std::size_t j = i + 1; j < V; ++j)
            if (c.color_of[i] == c.color_of[j] && g.adjacent(i, j)) {
                r.valid = false;
                r.witness_edge = {i, j};
                break;
            }

    std::map<std::uint64_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < V; ++i) classes[c.color_of[i]].push_back(i);
    r.colors_used = classes.size();

    const bool classify = g.family != graphs::Family::johnson && g.m == 2;
    for (const auto& [color, members] : classes) {
        ClassInfo info;
        info.color = color;
        info.size = members.size();
        if (classify) {
            std::vector<linalg::Subspace> lines;
            lines.reserve(members.size());
            for (auto i : members) lines.push_back(g.subspaces[i]);
            info.spread = spreads::classify_class(lines, *g.field);
        }
        r.classes.push_back(std::move(info));
    }

    // constructively exhibited clique sizes per family
    switch (g.family) {
        case graphs::Family::grassmann:
            r.lower_bound = to_u64_or_fail(linalg::gaussian_binomial(g.n - g.m + 1, 1, g.q), "lower bound");
            break;
        case graphs::Family::johnson:
            r.lower_bound = static_cast<std::uint64_t>(g.n - g.m + 1);
            break;
        case graphs::Family::qkneser:
            r.lower_bound = g.n >= 2 * g.m ? static_cast<std::uint64_t>(g.n / g.m) : 1;
            break;
    }
    return r;
}

} // namespace grcol::colorings
