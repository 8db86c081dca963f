#pragma once

// Classification of sets of lines (2-spaces) as partial spreads and spreads,
// and of whole line colorings as parallelisms.

#include <cstdint>
#include <span>
#include <vector>

#include "grcol/graphs.hpp"
#include "grcol/linalg.hpp"

namespace grcol::spreads {

struct SpreadVerdict {
    std::size_t size = 0;
    std::uint64_t points_covered = 0;   // distinct projective points
    bool is_partial_spread = false;     // pairwise trivially intersecting
    bool is_spread = false;             // covers every point exactly once
};

/// Classifies a set of lines of the same ambient space. Point cover is exact
/// counting over all binom(n,1)_q projective points.
/// Errors: Errc::dim_mismatch (not all dim 2 / same ambient).
SpreadVerdict classify_class(std::span<const linalg::Subspace> lines, const gf::Gf& field);

struct ParallelismSummary {
    std::size_t classes = 0;
    std::size_t spread_classes = 0;
    std::size_t partial_spread_classes = 0; // includes spread classes
    bool is_parallelism = false;            // every class is a spread
};

/// Classifies every color class of a line coloring. color_of maps vertex
/// index to a color identifier. Errc::not_lines for m != 2.
ParallelismSummary classify_coloring(const graphs::GraphHandle& g, std::span<const std::uint64_t> color_of);

} // namespace grcol::spreads
