#include "grcol/oracle.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cassert>
#include <chrono>

namespace grcol::oracle {

DsaturResult greedy_dsatur(const graphs::BitGraph& g) {
    const std::size_t n = g.n;
    DsaturResult r;
    r.color.assign(n, -1);
    if (n == 0) return r;

    std::vector<std::size_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) degree[i] = g.degree(i);

    // neighbor_has[v][c]: some neighbor of v already wears color c
    std::vector<std::vector<char>> neighbor_has(n);
    std::vector<int> saturation(n, 0);
    const std::size_t max_colors = n;
    for (auto& row : neighbor_has) row.assign(max_colors, 0);

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (r.color[v] != -1) continue;
            if (pick == n || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && degree[v] > degree[pick]))
                pick = v;
        }
        int c = 0;
        while (neighbor_has[pick][c]) ++c;
        r.color[pick] = c;
        r.num_colors = std::max(r.num_colors, c + 1);
        for (std::size_t u = 0; u < n; ++u) {
            if (!g.test(pick, u) || neighbor_has[u][c]) continue;
            neighbor_has[u][c] = 1;
            ++saturation[u];
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Max clique
// ---------------------------------------------------------------------------

namespace {

struct CliqueSearch {
    const graphs::BitGraph& g;
    std::size_t words;
    std::vector<std::size_t> order;     // vertices by degree desc, index asc
    std::vector<std::vector<std::uint64_t>> adj; // adjacency in order-index space
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool budget_hit = false;

    explicit CliqueSearch(const graphs::BitGraph& graph, std::uint64_t node_budget)
        : g(graph), words((graph.n + 63) / 64), budget(node_budget) {
        const std::size_t n = g.n;
        order.resize(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::vector<std::size_t> deg(n);
        for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
        adj.assign(n, std::vector<std::uint64_t>(words, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && g.test(order[i], order[j])) adj[i][j / 64] |= std::uint64_t(1) << (j % 64);
    }

    static std::size_t popcount(std::span<const std::uint64_t> v) {
        std::size_t c = 0;
        for (auto w : v) c += std::popcount(w);
        return c;
    }

    void expand(std::vector<std::uint64_t>& cand) {
        std::size_t remaining = popcount(cand);
        for (std::size_t w = 0; w < words; ++w) {
            while (cand[w]) {
                if (current.size() + remaining <= best.size()) return;
                if (++nodes > budget) {
                    budget_hit = true;
                    return;
                }
                const int bit = std::countr_zero(cand[w]);
                const std::size_t v = w * 64 + std::size_t(bit);
                // consuming v here also bars it from sibling subtrees, so no
                // vertex subset is visited twice
                cand[w] &= cand[w] - 1;
                --remaining;
                current.push_back(v);
                std::vector<std::uint64_t> next(words);
                bool nonempty = false;
                for (std::size_t k = 0; k < words; ++k) {
                    next[k] = cand[k] & adj[v][k];
                    nonempty |= next[k] != 0;
                }
                if (nonempty)
                    expand(next);
                else if (current.size() > best.size())
                    best = current;
                current.pop_back();
                if (budget_hit) return;
            }
        }
    }
};

} // namespace

CliqueResult max_clique(const graphs::BitGraph& g, std::uint64_t node_budget,
                        std::span<const std::size_t> seed) {
    CliqueResult r;
    if (g.n == 0) return r;

    CliqueSearch search(g, node_budget);
    // seed is a known clique in original vertex ids; translate to order space
    if (!seed.empty()) {
        for (std::size_t i = 0; i < seed.size(); ++i)
            for (std::size_t j = i + 1; j < seed.size(); ++j)
                if (!g.test(seed[i], seed[j]))
                    fail(Errc::param_mismatch, "max_clique: seed is not a clique");
        std::vector<std::size_t> pos(g.n);
        for (std::size_t i = 0; i < g.n; ++i) pos[search.order[i]] = i;
        for (auto v : seed) search.best.push_back(pos[v]);
    }
    std::vector<std::uint64_t> cand(search.words, 0);
    for (std::size_t i = 0; i < g.n; ++i) cand[i / 64] |= std::uint64_t(1) << (i % 64);
    search.expand(cand);

    r.nodes_expanded = search.nodes;
    r.budget_hit = search.budget_hit;
    r.members.reserve(search.best.size());
    for (auto i : search.best) r.members.push_back(search.order[i]);
    std::sort(r.members.begin(), r.members.end());
    return r;
}

// ---------------------------------------------------------------------------
// Exact chromatic number
// ---------------------------------------------------------------------------

namespace {

using Mask = std::bitset<kExactHardCap>;

struct ColorSearch {
    std::size_t n;
    std::vector<Mask> adj;
    std::vector<std::size_t> degree;
    std::vector<int> color;
    std::vector<Mask> forbidden; // colors worn by neighbors
    int k = 0;
    int used = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool budget_hit = false;

    bool dfs(std::size_t colored) {
        if (colored == n) return true;
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        // most saturated first, ties by degree then index
        std::size_t pick = n;
        std::size_t pick_sat = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            const std::size_t sat = forbidden[v].count();
            if (pick == n || sat > pick_sat ||
                (sat == pick_sat && degree[v] > degree[pick]))
                pick = v, pick_sat = sat;
        }
        const int limit = std::min(k, used + 1); // at most one fresh color
        for (int c = 0; c < limit; ++c) {
            if (forbidden[pick][std::size_t(c)]) continue;
            const int prev_used = used;
            color[pick] = c;
            used = std::max(used, c + 1);
            std::vector<std::size_t> touched;
            for (std::size_t u = 0; u < n; ++u)
                if (adj[pick][u] && color[u] == -1 && !forbidden[u][std::size_t(c)]) {
                    forbidden[u][std::size_t(c)] = true;
                    touched.push_back(u);
                }
            if (dfs(colored + 1)) return true;
            for (auto u : touched) forbidden[u][std::size_t(c)] = false;
            color[pick] = -1;
            used = prev_used;
            if (budget_hit) return false;
        }
        return false;
    }
};

} // namespace

ChromaticBounds exact_chromatic(const graphs::BitGraph& g, std::uint64_t node_budget,
                                std::size_t exact_cap) {
    const auto t0 = std::chrono::steady_clock::now();
    ChromaticBounds b;
    if (exact_cap > kExactHardCap)
        fail(Errc::config_error, "exact_chromatic: the solver supports at most 256 vertices");
    if (g.n > exact_cap)
        fail(Errc::size_limit_exceeded, "exact_chromatic: graph exceeds the exact cap");
    if (g.n == 0) {
        b.exact = 0;
        b.lower = b.upper = 0;
        return b;
    }

    const CliqueResult clique = max_clique(g, node_budget / 4);
    b.nodes_expanded += clique.nodes_expanded;
    const DsaturResult dsatur = greedy_dsatur(g);
    b.lower = std::max<int>(1, static_cast<int>(clique.members.size()));
    b.upper = dsatur.num_colors;

    if (clique.budget_hit) b.notes = "clique search hit its budget; ";
    if (b.lower == b.upper) {
        b.exact = b.lower;
        b.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return b;
    }

    ColorSearch search;
    search.n = g.n;
    search.adj.assign(g.n, Mask{});
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            if (i != j && g.test(i, j)) search.adj[i][j] = true;
    search.degree.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) search.degree[i] = g.degree(i);

    std::uint64_t remaining = node_budget > b.nodes_expanded ? node_budget - b.nodes_expanded : 0;
    for (int k = b.lower; k < b.upper; ++k) {
        search.k = k;
        search.used = 0;
        search.nodes = 0;
        search.budget = remaining;
        search.budget_hit = false;
        search.color.assign(g.n, -1);
        search.forbidden.assign(g.n, Mask{});
        // pre-color the clique: colors 0..|K|-1 up to symmetry
        std::size_t colored = 0;
        for (auto v : clique.members) {
            const int c = static_cast<int>(colored);
            search.color[v] = c;
            search.used = c + 1;
            for (std::size_t u = 0; u < g.n; ++u)
                if (search.adj[v][u] && search.color[u] == -1) search.forbidden[u][std::size_t(c)] = true;
            ++colored;
        }
        const bool colorable = search.dfs(colored);
        b.nodes_expanded += search.nodes;
        remaining = remaining > search.nodes ? remaining - search.nodes : 0;
        if (search.budget_hit) {
            b.budget_hit = true;
            b.notes += "k-colorability search hit its budget at k = " + std::to_string(k);
            b.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return b;
        }
        if (colorable) {
            b.exact = k;
            b.upper = k;
            b.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return b;
        }
        b.lower = k + 1;
    }
    // every k below the DSATUR bound failed, so the DSATUR coloring is optimal
    b.exact = b.upper;
    b.lower = b.upper;
    b.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return b;
}

} // namespace grcol::oracle
