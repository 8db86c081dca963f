#pragma once

// Constructive colorings of Grassmann, q-Kneser, and Johnson graphs.
//
// moore_color paints an m-space of F_q^n ≅ F_{q^n} with the projective class
// of the determinant of the matrix whose rows are the iterated q-power images
// of a basis; the class is independent of the basis, distinct on adjacent
// subspaces, and the palette has binom(n,1)_q colors.
//
// hawtin_color handles J_q(n,2) for q = 2^e and even n: the bivariate map
//     g(x̄, ȳ) = (x₁y + y₁x)^(q+1) + xy^q + x^qy
// on V = F_{q^(n−1)} × F_q sends each 2-space to an e-dimensional F_2-subspace
// of F_2^((n−1)e); 2-spaces sharing a point land on trivially-intersecting
// subspaces, so composing with a proper coloring of the binary Kneser graph
// K_2((n−1)e, e) yields a proper coloring with fewer than 2·binom(n−1,1)_q
// colors.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grcol/gf.hpp"
#include "grcol/graphs.hpp"
#include "grcol/linalg.hpp"
#include "grcol/spreads.hpp"

namespace grcol::colorings {

enum class Method : std::uint8_t { moore, hawtin, kneser_point, johnson_sum };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// A total vertex → color-identifier assignment. Color identifiers are
/// integer codes of normalized vectors (or residues for johnson_sum), never
/// densely renumbered; reports carry a dense renumbering alongside.
struct Coloring {
    Method method = Method::moore;
    std::vector<std::uint64_t> color_of;
    std::uint64_t palette_bound = 0; // method's guaranteed maximum color count
};

/// Projective class of the Moore determinant of any basis of s; requires
/// ctx.d() == s.ambient and dim s ≤ ctx.d().
linalg::ProjectivePoint moore_color(const linalg::Subspace& s, const gf::FieldCtx& ctx);

/// Same computation from an arbitrary (not necessarily canonical) basis,
/// given as rows of F_q coordinates. Exposed because basis independence is a
/// tested property.
linalg::ProjectivePoint moore_color_from_basis(std::span<const linalg::Vec> basis_rows,
                                               const gf::FieldCtx& ctx);

/// Colors an m-space s of F_2^N by the lexicographically least nonzero
/// vector of s ∩ U, U = span{e_1, …, e_{N−m+1}}. Subspaces sharing a color
/// share that point, hence are non-adjacent in K_2(N,m). Palette
/// 2^(N−m+1) − 1.
linalg::ProjectivePoint kneser_point_color(const linalg::Subspace& s, int m);

/// A vector of V = F_{q^(n−1)} × F_q: top-level field part plus an F_q
/// scalar. Serializes as (flatten of the field part, then the scalar).
struct VPoint {
    gf::FieldElement field_part;
    std::uint32_t scalar = 0;
};

VPoint vpoint_from_row(std::span<const std::uint32_t> row, const gf::FieldCtx& ctx);
linalg::Vec row_from_vpoint(const VPoint& v, const gf::FieldCtx& ctx);

gf::FieldElement hawtin_g(const VPoint& x, const VPoint& y, const gf::FieldCtx& ctx);

/// The image data of a 2-space span(x̄, ȳ): with A = (x₁y + y₁x)^(q+1) and
/// B = xy^q + x^qy, the set E = {α²A + αB : α ∈ F_q} of size q, closed under
/// addition, i.e. an e-dimensional F_2-subspace of F_2^((n−1)e).
struct EImage {
    gf::FieldElement A;
    gf::FieldElement B;
    std::vector<linalg::Vec> members; // flattened F_2 vectors, indexed by the code of α
    linalg::Subspace as_subspace;     // dim e inside F_2^((n−1)e)
};

/// Errors: Errc::odd_characteristic (q not a power of 2), Errc::odd_n
/// (ambient dimension n = d+1 odd), Errc::dependent_pair.
EImage hawtin_image(const VPoint& x, const VPoint& y, const gf::FieldCtx& ctx);

/// kneser_point_color of the image subspace of s; proper on J_q(n,2).
linalg::ProjectivePoint hawtin_color(const linalg::Subspace& s, const gf::FieldCtx& ctx);

/// Sum of the subset elements mod n; proper on J(n,m).
int johnson_sum_color(std::span<const int> subset, int n);

/// Runs the requested method over every vertex of g. ctx is required for
/// moore and hawtin and ignored otherwise.
Coloring color_graph(const graphs::GraphHandle& g, Method method, const gf::FieldCtx* ctx = nullptr);

struct ClassInfo {
    std::uint64_t color = 0;
    std::size_t size = 0;
    std::optional<spreads::SpreadVerdict> spread; // filled for line colorings
};

/// Serializable verdict of verify_coloring.
struct ColoringReport {
    Method method = Method::moore;
    graphs::Family family = graphs::Family::grassmann;
    std::uint64_t q = 0;
    int n = 0;
    int m = 0;
    std::size_t vertices = 0;
    bool valid = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness_edge;
    std::size_t colors_used = 0;
    std::uint64_t palette_bound = 0;
    std::uint64_t lower_bound = 0; // constructively exhibited clique size
    std::vector<ClassInfo> classes; // sorted by color; array index = dense color id
};

/// Checks that no adjacent pair shares a color, tabulates class sizes, and
/// classifies classes as partial spreads / spreads for line colorings.
/// Invalid colorings yield valid = false plus the first witness edge.
ColoringReport verify_coloring(const graphs::GraphHandle& g, const Coloring& c);

} // namespace grcol::colorings
