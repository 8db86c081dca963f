#include "grcol/gf.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>

namespace grcol::gf {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) fail(Errc::config_error, "q must be at least 2, got " + std::to_string(q));
    std::uint64_t base = 0;
    for (std::uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            base = f;
            break;
        }
    }
    if (base == 0) { // q itself prime
        p = static_cast<std::uint32_t>(q);
        e = 1;
        return;
    }
    std::uint32_t exp = 0;
    std::uint64_t rest = q;
    while (rest % base == 0) {
        rest /= base;
        ++exp;
    }
    if (rest != 1)
        fail(Errc::config_error, "q = " + std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(base);
    e = exp;
}

namespace {

// p^e with a cap; returns 0 on overflow past max.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t max) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > max / p) return 0;
        r *= p;
    }
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t k) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t f = 2; f * f <= k; ++f) {
        if (k % f == 0) {
            fs.push_back(f);
            while (k % f == 0) k /= f;
        }
    }
    if (k > 1) fs.push_back(k);
    return fs;
}

} // namespace

// ---------------------------------------------------------------------------
// Polynomials over a Gf
// ---------------------------------------------------------------------------

namespace poly {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, const Gf& F) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t a = i < f.size() ? f[i] : 0;
        std::uint32_t b = i < g.size() ? g[i] : 0;
        r[i] = F.add(a, b);
    }
    trim(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g, const Gf& F) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t a = i < f.size() ? f[i] : 0;
        std::uint32_t b = i < g.size() ? g[i] : 0;
        r[i] = F.sub(a, b);
    }
    trim(r);
    return r;
}

Poly mul(const Poly& f, const Poly& g, const Gf& F) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0) continue;
            r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
        }
    }
    trim(r);
    return r;
}

Poly mod(Poly f, const Poly& g, const Gf& F) {
    assert(!g.empty());
    const int dg = degree(g);
    const std::uint32_t lead_inv = F.inv(g.back());
    while (degree(f) >= dg) {
        const int shift = degree(f) - dg;
        const std::uint32_t factor = F.mul(f.back(), lead_inv);
        for (int i = 0; i <= dg; ++i)
            f[i + shift] = F.sub(f[i + shift], F.mul(factor, g[i]));
        trim(f);
    }
    return f;
}

Poly monic(Poly f, const Gf& F) {
    trim(f);
    if (f.empty()) return f;
    const std::uint32_t s = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, s);
    return f;
}

Poly gcd(Poly f, Poly g, const Gf& F) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = mod(f, g, F);
        f = std::move(g);
        g = std::move(r);
    }
    return monic(std::move(f), F);
}

Poly powmod(Poly t, std::uint64_t k, const Poly& f, const Gf& F) {
    Poly result{1};
    t = mod(std::move(t), f, F);
    while (k > 0) {
        if (k & 1) result = mod(mul(result, t, F), f, F);
        t = mod(mul(t, t, F), f, F);
        k >>= 1;
    }
    return result;
}

bool is_irreducible(const Poly& f, const Gf& F) {
    const int k = degree(f);
    if (k < 1) return false;
    if (k == 1) return true;
    const Poly x{0, 1};
    // t = x^(s^j) mod f, advanced one Frobenius step at a time.
    Poly t = x;
    for (int j = 1; j <= k; ++j) {
        t = powmod(std::move(t), F.q(), f, F);
        // At proper divisors k/r the iterate must share no root with f.
        for (std::uint32_t r : prime_factors(static_cast<std::uint32_t>(k))) {
            if (static_cast<std::uint32_t>(j) * r == static_cast<std::uint32_t>(k)) {
                Poly g = gcd(sub(t, x, F), f, F);
                if (degree(g) > 0) return false;
            }
        }
    }
    return t == x;
}

Poly find_irreducible(std::uint32_t deg, const Gf& F) {
    // Candidate low-order coefficients in integer-code order make the scan
    // produce the lexicographically least monic irreducible.
    std::vector<std::uint32_t> digits(deg, 0);
    while (true) {
        Poly f(digits.begin(), digits.end());
        f.push_back(1);
        if (is_irreducible(f, F)) return f;
        std::size_t pos = 0;
        while (pos < digits.size()) {
            if (++digits[pos] < F.q()) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) {
            std::fprintf(stderr, "no monic irreducible of degree %u over GF(%llu); arithmetic is broken\n",
                         deg, static_cast<unsigned long long>(F.q()));
            std::abort();
        }
    }
}

} // namespace poly

// ---------------------------------------------------------------------------
// Gf
// ---------------------------------------------------------------------------

Gf::Gf(std::uint32_t p, std::uint32_t e, std::uint64_t max_size) : p_(p), e_(e) {
    if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) fail(Errc::config_error, "extension degree must be positive");
    q_ = checked_pow(p, e, max_size);
    if (q_ == 0)
        fail(Errc::size_limit_exceeded,
             "field size " + std::to_string(p) + "^" + std::to_string(e) + " exceeds the configured limit");
    if (e == 1) {
        modulus_ = {0, 1}; // y
    } else {
        Gf prime_field(p, 1);
        modulus_ = poly::find_irreducible(e, prime_field);
    }
    if (p_ == 2) {
        for (std::size_t i = 0; i < modulus_.size(); ++i)
            if (modulus_[i]) modulus_bits_ |= std::uint64_t(1) << i;
    }
    if (q_ <= kTableCap) build_tables();
}

std::vector<std::uint32_t> Gf::digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = code % p_;
        code /= p_;
    }
    return d;
}

std::uint32_t Gf::encode(std::span<const std::uint32_t> digits) const {
    std::uint32_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i];
    return code;
}

std::uint32_t Gf::add_generic(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    std::uint32_t code = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        code += static_cast<std::uint32_t>(((a % p_) + (b % p_)) % p_ * scale);
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return code;
}

std::uint32_t Gf::mul_generic(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    if (p_ == 2) {
        // Carryless multiply, then reduce by the modulus bitmask.
        std::uint64_t prod = 0;
        std::uint64_t x = a;
        for (std::uint32_t i = 0; i < e_; ++i)
            if (b & (1u << i)) prod ^= x << i;
        for (int bit = static_cast<int>(2 * e_ - 2); bit >= static_cast<int>(e_); --bit)
            if (prod & (std::uint64_t(1) << bit)) prod ^= modulus_bits_ << (bit - e_);
        return static_cast<std::uint32_t>(prod);
    }
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    }
    // modulus_ is monic, so reduction needs no inverse
    for (std::uint32_t k = 2 * e_ - 2; k >= e_; --k) {
        const std::uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            const std::uint64_t term = std::uint64_t(c) * modulus_[i] % p_;
            prod[k - e_ + i] = static_cast<std::uint32_t>((prod[k - e_ + i] + p_ - term) % p_);
        }
    }
    prod.resize(e_);
    return encode(prod);
}

void Gf::build_tables() {
    const auto q = static_cast<std::size_t>(q_);
    add_table_.resize(q * q);
    mul_table_.resize(q * q);
    inv_table_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            add_table_[a * q + b] = static_cast<std::uint16_t>(
                add_generic(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
            mul_table_[a * q + b] = static_cast<std::uint16_t>(
                mul_generic(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
        }
    for (std::size_t a = 1; a < q; ++a)
        for (std::size_t b = 1; b < q; ++b)
            if (mul_table_[a * q + b] == 1) {
                inv_table_[a] = static_cast<std::uint32_t>(b);
                break;
            }
    has_tables_ = true;
}

std::uint32_t Gf::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (has_tables_) return add_table_[std::size_t(a) * q_ + b];
    return add_generic(a, b);
}

std::uint32_t Gf::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t code = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t d = a % p_;
        code += static_cast<std::uint32_t>((d == 0 ? 0 : p_ - d) * scale);
        a /= p_;
        scale *= p_;
    }
    return code;
}

std::uint32_t Gf::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Gf::mul(std::uint32_t a, std::uint32_t b) const {
    if (has_tables_) return mul_table_[std::size_t(a) * q_ + b];
    return mul_generic(a, b);
}

std::uint32_t Gf::inv(std::uint32_t a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    if (has_tables_) return inv_table_[a];
    return pow(a, q_ - 2);
}

std::uint32_t Gf::pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t result = 1;
    while (k > 0) {
        if (k & 1) result = mul(result, a);
        a = mul(a, a);
        k >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e, std::uint32_t d, std::uint64_t max_size)
    : p_(p), e_(e), d_(d), mid_(p, e, max_size) {
    if (d < 1) fail(Errc::config_error, "top extension degree must be positive");
    top_size_ = checked_pow(mid_.q(), d, max_size);
    if (top_size_ == 0)
        fail(Errc::size_limit_exceeded, "tower size p^(e*d) exceeds the configured limit");
    mod_top_ = (d == 1) ? poly::Poly{0, 1} : poly::find_irreducible(d, mid_);
}

FieldCtx make_ctx(std::uint32_t p, std::uint32_t e, std::uint32_t d, std::uint64_t max_size) {
    if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1 || d < 1) fail(Errc::config_error, "extension degrees must be positive");
    if (checked_pow(p, std::uint64_t(e) * d, max_size) == 0)
        fail(Errc::size_limit_exceeded, "tower size p^(e*d) exceeds the configured limit");
    return FieldCtx(p, e, d, max_size);
}

const char* level_name(Level level) {
    switch (level) {
        case Level::base: return "base";
        case Level::mid: return "mid";
        case Level::top: return "top";
    }
    return "?";
}

std::uint32_t FieldCtx::level_degree(Level level) const {
    switch (level) {
        case Level::base: return 1;
        case Level::mid: return e_;
        case Level::top: return d_;
    }
    return 0;
}

std::uint64_t FieldCtx::level_size(Level level) const {
    switch (level) {
        case Level::base: return p_;
        case Level::mid: return mid_.q();
        case Level::top: return top_size_;
    }
    return 0;
}

void FieldCtx::check_level(const FieldElement& a, Level expected, const char* op) const {
    if (a.level != expected)
        fail(Errc::level_mismatch, std::string(op) + ": expected " + level_name(expected) +
                                       "-level element, got " + level_name(a.level));
    if (a.coeffs.size() != level_degree(expected))
        fail(Errc::level_mismatch, std::string(op) + ": malformed coefficient vector");
}

void FieldCtx::check_same(const FieldElement& a, const FieldElement& b, const char* op) const {
    if (a.level != b.level)
        fail(Errc::level_mismatch, std::string(op) + ": operands at different tower levels");
    check_level(a, a.level, op);
    check_level(b, b.level, op);
}

FieldElement FieldCtx::zero(Level level) const {
    return FieldElement{level, std::vector<std::uint32_t>(level_degree(level), 0)};
}

FieldElement FieldCtx::one(Level level) const {
    auto a = zero(level);
    a.coeffs[0] = 1;
    return a;
}

FieldElement FieldCtx::from_coeffs(Level level, std::vector<std::uint32_t> coeffs) const {
    FieldElement a{level, std::move(coeffs)};
    if (a.coeffs.size() != level_degree(level))
        fail(Errc::level_mismatch, "from_coeffs: wrong coefficient count");
    const std::uint64_t bound = level == Level::top ? mid_.q() : p_;
    for (auto c : a.coeffs)
        if (c >= bound) fail(Errc::level_mismatch, "from_coeffs: coefficient out of range");
    return a;
}

FieldElement FieldCtx::from_code(Level level, std::uint64_t code) const {
    const std::uint64_t base = level == Level::top ? mid_.q() : p_;
    auto a = zero(level);
    for (auto& c : a.coeffs) {
        c = static_cast<std::uint32_t>(code % base);
        code /= base;
    }
    if (code != 0) fail(Errc::level_mismatch, "from_code: code out of range for level");
    return a;
}

std::uint64_t FieldCtx::code(const FieldElement& a) const {
    const std::uint64_t base = a.level == Level::top ? mid_.q() : p_;
    std::uint64_t code = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) code = code * base + a.coeffs[i];
    return code;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
    check_same(a, b, "add");
    FieldElement r = a;
    if (a.level == Level::top) {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = mid_.add(r.coeffs[i], b.coeffs[i]);
    } else {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p_;
    }
    return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
    check_level(a, a.level, "neg");
    FieldElement r = a;
    if (a.level == Level::top) {
        for (auto& c : r.coeffs) c = mid_.neg(c);
    } else {
        for (auto& c : r.coeffs) c = c == 0 ? 0 : p_ - c;
    }
    return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    check_same(a, b, "mul");
    if (a.level != Level::top) {
        // base and mid levels go through the scalar fields directly
        if (a.level == Level::base)
            return FieldElement{Level::base, {static_cast<std::uint32_t>(std::uint64_t(a.coeffs[0]) * b.coeffs[0] % p_)}};
        const std::uint32_t prod = mid_.mul(mid_.encode(a.coeffs), mid_.encode(b.coeffs));
        return FieldElement{Level::mid, mid_.digits(prod)};
    }
    poly::Poly fa(a.coeffs.begin(), a.coeffs.end());
    poly::Poly fb(b.coeffs.begin(), b.coeffs.end());
    poly::trim(fa);
    poly::trim(fb);
    poly::Poly prod = poly::mod(poly::mul(fa, fb, mid_), mod_top_, mid_);
    prod.resize(d_, 0);
    return FieldElement{Level::top, std::move(prod)};
}

FieldElement FieldCtx::pow(const FieldElement& a, std::uint64_t k) const {
    check_level(a, a.level, "pow");
    FieldElement result = one(a.level);
    FieldElement base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
    check_level(a, a.level, "inv");
    if (a.is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    return pow(a, level_size(a.level) - 2);
}

FieldElement FieldCtx::frobenius(const FieldElement& a, std::uint64_t i) const {
    check_level(a, Level::top, "frobenius");
    // x ↦ x^q has order d on the top field.
    FieldElement r = a;
    for (std::uint64_t step = 0; step < i % d_; ++step) r = pow(r, mid_.q());
    return r;
}

FieldElement FieldCtx::scale_top(std::uint32_t mid_scalar, const FieldElement& a) const {
    check_level(a, Level::top, "scale_top");
    FieldElement r = a;
    for (auto& c : r.coeffs) c = mid_.mul(mid_scalar, c);
    return r;
}

FieldElement FieldCtx::moore_det(std::span<const FieldElement> xs) const {
    const std::size_t m = xs.size();
    if (m == 0) fail(Errc::bad_dim, "moore_det: empty input");
    if (m > d_) fail(Errc::too_many_vectors, "moore_det: more vectors than the top degree");
    for (const auto& x : xs) check_level(x, Level::top, "moore_det");

    // M[i][j] = xs[j]^(q^i); each row is one more Frobenius step.
    std::vector<std::vector<FieldElement>> M(m, std::vector<FieldElement>(m));
    for (std::size_t j = 0; j < m; ++j) M[0][j] = xs[j];
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) M[i][j] = pow(M[i - 1][j], mid_.q());

    // Gaussian elimination over the top field, tracking row swaps.
    FieldElement det = one(Level::top);
    bool negate = false;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && M[pivot][col].is_zero()) ++pivot;
        if (pivot == m) return zero(Level::top);
        if (pivot != col) {
            std::swap(M[pivot], M[col]);
            negate = !negate;
        }
        det = mul(det, M[col][col]);
        const FieldElement piv_inv = inv(M[col][col]);
        for (std::size_t r = col + 1; r < m; ++r) {
            if (M[r][col].is_zero()) continue;
            const FieldElement factor = mul(M[r][col], piv_inv);
            for (std::size_t c = col; c < m; ++c) M[r][c] = sub(M[r][c], mul(factor, M[col][c]));
        }
    }
    return negate ? neg(det) : det;
}

bool is_permutation_exponent(const FieldCtx& ctx) {
    return std::gcd(ctx.q() + 1, ctx.top_size() - 1) == 1;
}

} // namespace grcol::gf
