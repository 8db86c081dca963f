#pragma once

// Builders and adjacency predicates for Grassmann, q-Kneser, and Johnson
// graphs, plus structural helpers (valency, pencil cliques). Handles are
// immutable after build and adjacency queries are pure.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "grcol/gf.hpp"
#include "grcol/linalg.hpp"

namespace grcol::graphs {

enum class Family : std::uint8_t { grassmann, qkneser, johnson };

const char* family_name(Family f);

/// Packed symmetric adjacency bits, one full row per vertex.
struct BitGraph {
    std::size_t n = 0;
    std::size_t stride = 0; // 64-bit words per row
    std::vector<std::uint64_t> words;

    BitGraph() = default;
    explicit BitGraph(std::size_t n_)
        : n(n_), stride((n_ + 63) / 64), words(n_ * ((n_ + 63) / 64), 0) {}

    void add_edge(std::size_t i, std::size_t j) {
        words[i * stride + j / 64] |= std::uint64_t(1) << (j % 64);
        words[j * stride + i / 64] |= std::uint64_t(1) << (i % 64);
    }
    bool test(std::size_t i, std::size_t j) const {
        return (words[i * stride + j / 64] >> (j % 64)) & 1;
    }
    std::span<const std::uint64_t> row(std::size_t i) const { return {words.data() + i * stride, stride}; }
    std::size_t degree(std::size_t i) const;
    std::uint64_t edge_count() const;

    static BitGraph from_edges(std::size_t n, std::span<const std::pair<int, int>> edges);
};

bool grassmann_adjacent(const linalg::Subspace& a, const linalg::Subspace& b, const gf::Gf& field);
bool kneser_adjacent(const linalg::Subspace& a, const linalg::Subspace& b, const gf::Gf& field);
/// Subsets are 1-based, sorted, duplicate-free, size m with entries in 1..n.
bool johnson_adjacent(std::span<const int> a, std::span<const int> b, int n, int m);

/// q·binom(m,1)_q·binom(n−m,1)_q, the degree of every vertex of J_q(n,m).
/// Requires m < n.
linalg::BigInt valency(std::uint64_t q, int n, int m);

struct BuildCaps {
    std::uint64_t enum_cap = linalg::kDefaultEnumCap;
    std::size_t materialize_cap = std::size_t(1) << 15;
};

/// A built graph: vertices in deterministic enumeration order, adjacency
/// either materialized as packed bits (vertex count ≤ materialize_cap) or
/// answered by the predicate on demand.
struct GraphHandle {
    Family family = Family::grassmann;
    std::uint64_t q = 0; // 0 for johnson
    int n = 0;
    int m = 0;
    std::shared_ptr<const gf::Gf> field;             // subspace families only
    std::vector<linalg::Subspace> subspaces;         // grassmann / qkneser
    std::vector<std::vector<int>> subsets;           // johnson, lexicographic
    std::optional<BitGraph> bits;
    std::optional<std::uint64_t> edges;              // counted when materialized
    std::optional<std::uint64_t> regular_degree;     // set when all degrees agree

    std::size_t num_vertices() const {
        return family == Family::johnson ? subsets.size() : subspaces.size();
    }
    bool adjacent(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t i) const;
};

GraphHandle build_graph(Family family, std::uint64_t q, int n, int m, const BuildCaps& caps = {});

/// All m-spaces containing the (m−1)-space t: a pencil, pairwise adjacent in
/// J_q(n,m), of size binom(n−m+1,1)_q. Returned in enumeration order.
std::vector<linalg::Subspace> pencil_clique(const linalg::Subspace& t, const gf::Gf& field);

} // namespace grcol::graphs
