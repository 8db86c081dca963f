#pragma once

// Ground-truth chromatic machinery at desk scale: DSATUR upper bounds,
// branch-and-bound max cliques, and exact chromatic numbers by iterative
// deepening over k-colorability. Everything is deterministic: ties break by
// vertex index, budgets count search nodes rather than wall-clock, and there
// is no randomization anywhere.
//
// A literature aside the oracle deliberately does not encode: for odd n ≥ 5
// the value χ(J_2(n,2)) = binom(n−1,1)_2 + 3 has been reported; it fails at
// n = 3 (where the graph is K_7), so nothing here asserts it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grcol/graphs.hpp"

namespace grcol::oracle {

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000;
inline constexpr std::size_t kDefaultExactCap = 64;
/// Fixed bitset width of the exact solver; exact_cap may be raised to this.
inline constexpr std::size_t kExactHardCap = 256;

struct DsaturResult {
    std::vector<int> color;
    int num_colors = 0;
};

/// Proper coloring by maximum saturation degree, ties by degree then index.
DsaturResult greedy_dsatur(const graphs::BitGraph& g);

struct CliqueResult {
    std::vector<std::size_t> members; // sorted
    std::uint64_t nodes_expanded = 0;
    bool budget_hit = false; // best-so-far only, not proven maximum
};

/// Branch-and-bound maximum clique, optionally warm-started with a known
/// clique (e.g. a pencil). On budget exhaustion returns the best clique found
/// with budget_hit set.
CliqueResult max_clique(const graphs::BitGraph& g, std::uint64_t node_budget = kDefaultNodeBudget,
                        std::span<const std::size_t> seed = {});

struct ChromaticBounds {
    int lower = 1;
    int upper = 0;
    std::optional<int> exact;
    std::uint64_t nodes_expanded = 0;
    bool budget_hit = false;
    std::string notes;
    double elapsed_s = 0; // informational; never serialized
};

/// Exact chromatic number via iterative deepening on k with an
/// independent-set branch-and-bound (clique pre-coloring, fresh-color
/// symmetry pruning, most-saturated-first ordering). Requires
/// |V| ≤ exact_cap (Errc::size_limit_exceeded otherwise); on budget
/// exhaustion returns bounds only.
ChromaticBounds exact_chromatic(const graphs::BitGraph& g,
                                std::uint64_t node_budget = kDefaultNodeBudget,
                                std::size_t exact_cap = kDefaultExactCap);

} // namespace grcol::oracle
