#pragma once

// Exact arithmetic in prime fields, extension fields, and two-level towers
// F_p ⊂ F_q ⊂ F_{q^d} (q = p^e), including Frobenius powers and Moore
// determinants.
//
// Every element of a single field level is identified by an integer code:
// code(a) = Σ codeᵢ·baseⁱ over little-endian coefficients (constant term
// first), recursively down to F_p digits. All moduli are chosen
// deterministically (lexicographically least monic irreducible, coefficients
// compared little-endian as integers), so codes are stable across runs and
// machines.

#include <cstdint>
#include <span>
#include <vector>

#include "grcol/errors.hpp"

namespace grcol::gf {

/// Hard cap on the number of elements of any constructed field.
inline constexpr std::uint64_t kDefaultMaxFieldSize = std::uint64_t(1) << 26;

/// Multiplication/addition tables are precomputed (eagerly, at construction)
/// for fields up to this many elements.
inline constexpr std::uint64_t kTableCap = 512;

bool is_prime(std::uint64_t n);

/// Factors q = p^e with p prime. Fails with Errc::config_error if q is not a
/// prime power (or q < 2).
void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e);

/// A single finite field F_{p^e} operating on integer codes in [0, q).
///
/// For e > 1 the field is F_p[y]/(modulus) with the modulus chosen
/// deterministically; codes are base-p digit encodings of the coefficient
/// vector. Instances are immutable after construction and freely shareable
/// across threads.
class Gf {
public:
    /// Builds F_{p^e} with the canonical (lexicographically least) modulus.
    Gf(std::uint32_t p, std::uint32_t e, std::uint64_t max_size = kDefaultMaxFieldSize);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    /// Monic degree-e modulus over F_p, little-endian, length e+1. For e = 1
    /// this is y (codes {0,1}).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

    /// Little-endian base-p digits of a code, length e.
    std::vector<std::uint32_t> digits(std::uint32_t code) const;
    std::uint32_t encode(std::span<const std::uint32_t> digits) const;

private:
    std::uint32_t add_generic(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t modulus_bits_ = 0; // p == 2 fast path
    bool has_tables_ = false;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint32_t> inv_table_;
};

/// Position of an element inside the tower F_p ⊂ F_q ⊂ F_{q^d}.
enum class Level : std::uint8_t { base, mid, top };

const char* level_name(Level level);

/// Coefficient vector of a field element over the next field down the tower,
/// little-endian. base: one F_p digit; mid: e F_p digits; top: d F_q codes.
/// Equality is coefficient-wise; there is no hidden normalization.
struct FieldElement {
    Level level = Level::base;
    std::vector<std::uint32_t> coeffs;

    bool operator==(const FieldElement&) const = default;
    bool is_zero() const {
        for (auto c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

/// Immutable description of a field tower F_p ⊂ F_q ⊂ F_{q^d}.
///
/// Construction proves irreducibility of both moduli with a deterministic
/// test; there is no randomness anywhere. All operations are pure functions
/// of their inputs and the context is safe to share across threads.
class FieldCtx {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t q() const { return mid_.q(); }
    /// Number of elements of the top field, q^d.
    std::uint64_t top_size() const { return top_size_; }

    /// The mid field F_q as a standalone scalar field (used as the ambient
    /// coefficient field for all subspace linear algebra).
    const Gf& mid() const { return mid_; }
    const std::vector<std::uint32_t>& mod_base() const { return mid_.modulus(); }
    /// Monic degree-d modulus over F_q, little-endian, length d+1. For d = 1
    /// this degenerates to y and all top operations delegate down.
    const std::vector<std::uint32_t>& mod_top() const { return mod_top_; }

    std::uint32_t level_degree(Level level) const;
    std::uint64_t level_size(Level level) const;

    FieldElement zero(Level level) const;
    FieldElement one(Level level) const;
    FieldElement from_coeffs(Level level, std::vector<std::uint32_t> coeffs) const;
    FieldElement from_code(Level level, std::uint64_t code) const;
    std::uint64_t code(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Requires a != 0 (Errc::division_by_zero otherwise).
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t k) const;

    /// a^(q^i) for a in the top field; an F_q-linear field automorphism.
    FieldElement frobenius(const FieldElement& a, std::uint64_t i) const;

    /// Determinant of the m×m matrix with entry (i,j) = xs[j]^(q^i),
    /// i = 0..m−1, over the top field. Zero iff the xs are F_q-linearly
    /// dependent. Requires 1 ≤ m ≤ d (Errc::too_many_vectors above d).
    FieldElement moore_det(std::span<const FieldElement> xs) const;

    /// Multiplies a top-level element coefficient-wise by a mid-field scalar.
    FieldElement scale_top(std::uint32_t mid_scalar, const FieldElement& a) const;

private:
    friend FieldCtx make_ctx(std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t);
    FieldCtx(std::uint32_t p, std::uint32_t e, std::uint32_t d, std::uint64_t max_size);

    void check_level(const FieldElement& a, Level expected, const char* op) const;
    void check_same(const FieldElement& a, const FieldElement& b, const char* op) const;

    std::uint32_t p_ = 0, e_ = 0, d_ = 0;
    std::uint64_t top_size_ = 0;
    Gf mid_;
    std::vector<std::uint32_t> mod_top_;
};

/// Builds the tower for (p, e, d) with deterministically chosen irreducible
/// moduli. Errors: Errc::not_prime, Errc::size_limit_exceeded.
FieldCtx make_ctx(std::uint32_t p, std::uint32_t e, std::uint32_t d,
                  std::uint64_t max_size = kDefaultMaxFieldSize);

/// True iff x ↦ x^(q+1) is a bijection of the top field,
/// i.e. gcd(q+1, q^d − 1) = 1.
bool is_permutation_exponent(const FieldCtx& ctx);

namespace poly {

// Dense polynomials over a Gf: little-endian coefficient codes, no trailing
// zeros (the zero polynomial is the empty vector).

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const Poly& f, const Poly& g, const Gf& F);
Poly sub(const Poly& f, const Poly& g, const Gf& F);
Poly mul(const Poly& f, const Poly& g, const Gf& F);
Poly mod(Poly f, const Poly& g, const Gf& F);
Poly monic(Poly f, const Gf& F);
Poly gcd(Poly f, Poly g, const Gf& F);
/// t^k mod f.
Poly powmod(Poly t, std::uint64_t k, const Poly& f, const Gf& F);
/// Deterministic irreducibility test: f of degree k over F_s is irreducible
/// iff x^(s^k) ≡ x (mod f) and gcd(x^(s^(k/r)) − x, f) = 1 for each prime
/// r | k.
bool is_irreducible(const Poly& f, const Gf& F);
/// Lexicographically least monic irreducible polynomial of the given degree
/// (coefficient vectors compared little-endian as integers). Aborts if the
/// scan finds nothing; irreducibles of every degree exist, so reaching that
/// abort means the arithmetic underneath is broken.
Poly find_irreducible(std::uint32_t degree, const Gf& F);

} // namespace poly

} // namespace grcol::gf
