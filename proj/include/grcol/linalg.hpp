#pragma once

// Linear algebra over F_q: canonical RREF subspaces, deterministic
// enumeration, intersections, projective normalization, tower flattening,
// and exact Gaussian binomials. No floating point anywhere.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grcol/errors.hpp"
#include "grcol/gf.hpp"

namespace grcol::linalg {

using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<std::uint32_t>;

/// Default guard rail: enumeration refuses when the subspace count exceeds
/// this cap.
inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

/// Row-major dense matrix of F_q codes.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    std::uint32_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
    std::span<const std::uint32_t> row(int r) const { return {a.data() + std::size_t(r) * cols, std::size_t(cols)}; }
    std::span<std::uint32_t> row(int r) { return {a.data() + std::size_t(r) * cols, std::size_t(cols)}; }
};

/// In-place reduction to reduced row echelon form; returns the rank. Zero
/// rows sink to the bottom.
int rref_in_place(FqMatrix& m, const gf::Gf& field);

int rank(FqMatrix m, const gf::Gf& field);

/// The number of m-dimensional subspaces of F_q^n, computed exactly.
/// Returns 0 for m > n and 1 for m = 0.
BigInt gaussian_binomial(int n, int m, std::uint64_t q);

/// Canonical m-dimensional subspace of F_q^n: the unique RREF basis of the
/// row space. dim 0 (no rows) is a valid value.
struct Subspace {
    int ambient = 0;
    int dim = 0;
    std::vector<std::uint32_t> rows; // dim × ambient, row-major

    static Subspace zero_space(int ambient) { return Subspace{ambient, 0, {}}; }

    std::span<const std::uint32_t> row(int i) const {
        return {rows.data() + std::size_t(i) * ambient, std::size_t(ambient)};
    }
    bool operator==(const Subspace&) const = default;
};

/// Total order matching the deterministic enumeration: (ambient, dim), then
/// pivot-column profile lexicographically, then free entries compared
/// little-endian as integers.
bool enum_less(const Subspace& a, const Subspace& b);

struct EnumOrderLess {
    bool operator()(const Subspace& a, const Subspace& b) const { return enum_less(a, b); }
};

/// Pivot columns of an RREF subspace (strictly increasing).
std::vector<int> pivot_columns(const Subspace& s);

/// Canonical RREF of a nonzero row space. Errc::zero_space if all rows are
/// zero.
Subspace rref(const FqMatrix& m, const gf::Gf& field);

/// dim(a ∩ b) = dim a + dim b − rank(stacked rows).
int intersect_dim(const Subspace& a, const Subspace& b, const gf::Gf& field);

/// Streams every m-space of F_q^n exactly once: pivot-column profiles in
/// lexicographic order, free entries in integer-code order. Constructed rows
/// are already canonical RREF.
class SubspaceStream {
public:
    SubspaceStream(int n, int m, const gf::Gf& field);
    std::optional<Subspace> next();

private:
    bool advance_profile();
    int n_, m_;
    const gf::Gf& field_;
    std::vector<int> profile_;
    std::vector<std::pair<int, int>> free_pos_;
    std::vector<std::uint32_t> free_val_;
    bool done_ = false;
    bool fresh_profile_ = true;
};

/// Materializes the full enumeration. Errc::size_limit_exceeded when the
/// count exceeds the cap.
std::vector<Subspace> all_subspaces(int n, int m, const gf::Gf& field,
                                    std::uint64_t enum_cap = kDefaultEnumCap);

/// Nonzero vector scaled so its first nonzero coordinate is 1; canonical
/// representative of an F_q^*-orbit.
struct ProjectivePoint {
    Vec coords;
    bool operator==(const ProjectivePoint&) const = default;
};

ProjectivePoint normalize_projective(std::span<const std::uint32_t> v, const gf::Gf& field);

/// Little-endian integer code of a coordinate vector (first coordinate least
/// significant), matching the element-code convention.
std::uint64_t vector_code(std::span<const std::uint32_t> v, std::uint64_t q);

/// Lexicographic comparison of coordinate vectors by integer code, first
/// coordinate most significant.
bool lex_less(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Coefficient vector of a over the field one level down the tower.
Vec flatten(const gf::FieldElement& a, const gf::FieldCtx& ctx);

/// Coefficient vector of a over F_p (two-level descent concatenates
/// low-coefficient digit blocks first).
Vec flatten_to_prime(const gf::FieldElement& a, const gf::FieldCtx& ctx);

/// RREF subspace of F_q^d spanned by the flattened top-level elements.
/// Errc::dependent_input when the elements are F_q-dependent.
Subspace element_span_to_subspace(std::span<const gf::FieldElement> xs, const gf::FieldCtx& ctx);

/// The (q^m − 1)/(q − 1) projective points covered by a subspace, sorted by
/// coordinate code.
std::vector<ProjectivePoint> subspace_points(const Subspace& s, const gf::Gf& field);

} // namespace grcol::linalg
