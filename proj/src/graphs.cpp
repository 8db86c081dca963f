#include "grcol/graphs.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace grcol::graphs {

const char* family_name(Family f) {
    switch (f) {
        case Family::grassmann: return "grassmann";
        case Family::qkneser: return "qkneser";
        case Family::johnson: return "johnson";
    }
    return "?";
}

std::size_t BitGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < stride; ++w) d += std::popcount(words[i * stride + w]);
    return d;
}

std::uint64_t BitGraph::edge_count() const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += degree(i);
    return total / 2;
}

BitGraph BitGraph::from_edges(std::size_t n, std::span<const std::pair<int, int>> edges) {
    BitGraph g(n);
    for (auto [i, j] : edges) g.add_edge(std::size_t(i), std::size_t(j));
    return g;
}

bool grassmann_adjacent(const linalg::Subspace& a, const linalg::Subspace& b, const gf::Gf& field) {
    if (a.ambient != b.ambient || a.dim != b.dim)
        fail(Errc::param_mismatch, "grassmann_adjacent: mismatched (n, m)");
    if (a == b) return false;
    return linalg::intersect_dim(a, b, field) == a.dim - 1;
}

bool kneser_adjacent(const linalg::Subspace& a, const linalg::Subspace& b, const gf::Gf& field) {
    if (a.ambient != b.ambient || a.dim != b.dim)
        fail(Errc::param_mismatch, "kneser_adjacent: mismatched (n, m)");
    if (a == b) return false;
    return linalg::intersect_dim(a, b, field) == 0;
}

namespace {

void check_subset(std::span<const int> a, int n, int m) {
    if (static_cast<int>(a.size()) != m) fail(Errc::bad_subset, "subset has wrong size");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || a[i] > n) fail(Errc::bad_subset, "subset element out of range");
        if (i > 0 && a[i] <= a[i - 1]) fail(Errc::bad_subset, "subset not strictly increasing");
    }
}

} // namespace

bool johnson_adjacent(std::span<const int> a, std::span<const int> b, int n, int m) {
    check_subset(a, n, m);
    check_subset(b, n, m);
    int common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) ++common, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return common == m - 1;
}

linalg::BigInt valency(std::uint64_t q, int n, int m) {
    if (m >= n) fail(Errc::bad_dim, "valency: requires m < n");
    return linalg::BigInt(q) * linalg::gaussian_binomial(m, 1, q) * linalg::gaussian_binomial(n - m, 1, q);
}

bool GraphHandle::adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    if (bits) return bits->test(i, j);
    switch (family) {
        case Family::grassmann: return grassmann_adjacent(subspaces[i], subspaces[j], *field);
        case Family::qkneser: return kneser_adjacent(subspaces[i], subspaces[j], *field);
        case Family::johnson: return johnson_adjacent(subsets[i], subsets[j], n, m);
    }
    return false;
}

std::size_t GraphHandle::degree(std::size_t i) const {
    if (bits) return bits->degree(i);
    std::size_t d = 0;
    for (std::size_t j = 0; j < num_vertices(); ++j)
        if (j != i && adjacent(i, j)) ++d;
    return d;
}

namespace {

std::vector<std::vector<int>> all_subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m < 1 || m > n) fail(Errc::bad_dim, "johnson: need 1 <= m <= n");
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == n - m + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

GraphHandle build_graph(Family family, std::uint64_t q, int n, int m, const BuildCaps& caps) {
    GraphHandle g;
    g.family = family;
    g.n = n;
    g.m = m;

    if (family == Family::johnson) {
        g.q = 0;
        g.subsets = all_subsets(n, m);
        if (g.subsets.size() > caps.enum_cap)
            fail(Errc::size_limit_exceeded, "johnson vertex count exceeds the enumeration cap");
    } else {
        std::uint32_t p = 0, e = 0;
        gf::factor_prime_power(q, p, e);
        g.q = q;
        g.field = std::make_shared<gf::Gf>(p, e);
        g.subspaces = linalg::all_subspaces(n, m, *g.field, caps.enum_cap);
    }

    const std::size_t V = g.num_vertices();
    if (V <= caps.materialize_cap) {
        BitGraph bits(V);
        for (std::size_t i = 0; i < V; ++i)
            for (std::size_t j = i + 1; j < V; ++j) {
                bool adj = false;
                switch (family) {
                    case Family::grassmann:
                        adj = grassmann_adjacent(g.subspaces[i], g.subspaces[j], *g.field);
                        break;
                    case Family::qkneser:
                        adj = kneser_adjacent(g.subspaces[i], g.subspaces[j], *g.field);
                        break;
                    case Family::johnson:
                        adj = johnson_adjacent(g.subsets[i], g.subsets[j], n, m);
                        break;
                }
                if (adj) bits.add_edge(i, j);
            }
        g.edges = bits.edge_count();
        bool regular = V > 0;
        const std::size_t d0 = V > 0 ? bits.degree(0) : 0;
        for (std::size_t i = 1; i < V && regular; ++i) regular = bits.degree(i) == d0;
        if (regular && V > 0) g.regular_degree = d0;
        g.bits = std::move(bits);
    }
    return g;
}

std::vector<linalg::Subspace> pencil_clique(const linalg::Subspace& t, const gf::Gf& field) {
    const int m = t.dim + 1;
    if (m > t.ambient) fail(Errc::bad_dim, "pencil_clique: m exceeds the ambient dimension");
    std::set<linalg::Subspace, linalg::EnumOrderLess> out;
    linalg::SubspaceStream points(t.ambient, 1, field);
    while (auto pt = points.next()) {
        linalg::FqMatrix stacked(m, t.ambient);
        std::copy(t.rows.begin(), t.rows.end(), stacked.a.begin());
        std::copy(pt->rows.begin(), pt->rows.end(), stacked.a.begin() + t.rows.size());
        linalg::FqMatrix work = stacked;
        if (linalg::rref_in_place(work, field) < m) continue; // point lies in t
        linalg::Subspace s{t.ambient, m, {}};
        s.rows.assign(work.a.begin(), work.a.begin() + std::size_t(m) * t.ambient);
        out.insert(std::move(s));
    }
    return {out.begin(), out.end()};
}

} // namespace grcol::graphs
