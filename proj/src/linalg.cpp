#include "grcol/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

namespace grcol::linalg {

int rref_in_place(FqMatrix& m, const gf::Gf& field) {
    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        int r = pivot_row;
        while (r < m.rows && m.at(r, col) == 0) ++r;
        if (r == m.rows) continue;
        if (r != pivot_row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(r, c), m.at(pivot_row, c));
        const std::uint32_t scale = field.inv(m.at(pivot_row, col));
        for (int c = col; c < m.cols; ++c) m.at(pivot_row, c) = field.mul(scale, m.at(pivot_row, c));
        for (int rr = 0; rr < m.rows; ++rr) {
            if (rr == pivot_row || m.at(rr, col) == 0) continue;
            const std::uint32_t factor = m.at(rr, col);
            for (int c = col; c < m.cols; ++c)
                m.at(rr, c) = field.sub(m.at(rr, c), field.mul(factor, m.at(pivot_row, c)));
        }
        ++pivot_row;
    }
    return pivot_row;
}

int rank(FqMatrix m, const gf::Gf& field) { return rref_in_place(m, field); }

BigInt gaussian_binomial(int n, int m, std::uint64_t q) {
    if (m < 0 || n < 0 || m > n) return 0;
    BigInt num = 1, den = 1;
    const BigInt bq = q;
    for (int i = 0; i < m; ++i) {
        num *= boost::multiprecision::pow(bq, n - i) - 1;
        den *= boost::multiprecision::pow(bq, i + 1) - 1;
    }
    return num / den;
}

Subspace rref(const FqMatrix& m, const gf::Gf& field) {
    FqMatrix work = m;
    const int r = rref_in_place(work, field);
    if (r == 0) fail(Errc::zero_space, "rref: zero row space");
    Subspace s{m.cols, r, {}};
    s.rows.assign(work.a.begin(), work.a.begin() + std::size_t(r) * m.cols);
    return s;
}

std::vector<int> pivot_columns(const Subspace& s) {
    std::vector<int> pivots(s.dim);
    for (int i = 0; i < s.dim; ++i) {
        int j = 0;
        while (j < s.ambient && s.row(i)[j] == 0) ++j;
        pivots[i] = j;
    }
    return pivots;
}

namespace {

// Free entry values of an RREF matrix in row-major position order.
std::vector<std::uint32_t> free_entries(const Subspace& s, const std::vector<int>& pivots) {
    std::vector<bool> is_pivot(s.ambient, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::uint32_t> vals;
    for (int i = 0; i < s.dim; ++i)
        for (int j = pivots[i] + 1; j < s.ambient; ++j)
            if (!is_pivot[j]) vals.push_back(s.row(i)[j]);
    return vals;
}

} // namespace

bool enum_less(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.dim != b.dim) return a.dim < b.dim;
    const auto pa = pivot_columns(a), pb = pivot_columns(b);
    if (pa != pb) return pa < pb;
    const auto fa = free_entries(a, pa), fb = free_entries(b, pb);
    // little-endian integer comparison: last entry most significant
    for (std::size_t i = fa.size(); i-- > 0;)
        if (fa[i] != fb[i]) return fa[i] < fb[i];
    return false;
}

int intersect_dim(const Subspace& a, const Subspace& b, const gf::Gf& field) {
    if (a.ambient != b.ambient) fail(Errc::ambient_mismatch, "intersect_dim: different ambient spaces");
    FqMatrix stacked(a.dim + b.dim, a.ambient);
    std::copy(a.rows.begin(), a.rows.end(), stacked.a.begin());
    std::copy(b.rows.begin(), b.rows.end(), stacked.a.begin() + a.rows.size());
    return a.dim + b.dim - rref_in_place(stacked, field);
}

SubspaceStream::SubspaceStream(int n, int m, const gf::Gf& field) : n_(n), m_(m), field_(field) {
    if (m < 1 || m > n) fail(Errc::bad_dim, "enumerate_subspaces: need 0 < m <= n");
    profile_.resize(m);
    for (int i = 0; i < m; ++i) profile_[i] = i;
    fresh_profile_ = true;
}

bool SubspaceStream::advance_profile() {
    // next m-combination of {0..n-1} in lexicographic order
    int i = m_ - 1;
    while (i >= 0 && profile_[i] == n_ - m_ + i) --i;
    if (i < 0) return false;
    ++profile_[i];
    for (int j = i + 1; j < m_; ++j) profile_[j] = profile_[j - 1] + 1;
    return true;
}

std::optional<Subspace> SubspaceStream::next() {
    if (done_) return std::nullopt;
    if (fresh_profile_) {
        free_pos_.clear();
        std::vector<bool> is_pivot(n_, false);
        for (int p : profile_) is_pivot[p] = true;
        for (int i = 0; i < m_; ++i)
            for (int j = profile_[i] + 1; j < n_; ++j)
                if (!is_pivot[j]) free_pos_.emplace_back(i, j);
        free_val_.assign(free_pos_.size(), 0);
        fresh_profile_ = false;
    }

    Subspace s{n_, m_, std::vector<std::uint32_t>(std::size_t(m_) * n_, 0)};
    for (int i = 0; i < m_; ++i) s.rows[std::size_t(i) * n_ + profile_[i]] = 1;
    for (std::size_t k = 0; k < free_pos_.size(); ++k)
        s.rows[std::size_t(free_pos_[k].first) * n_ + free_pos_[k].second] = free_val_[k];

    // odometer: first free position is the least significant digit
    std::size_t pos = 0;
    while (pos < free_val_.size()) {
        if (++free_val_[pos] < field_.q()) break;
        free_val_[pos] = 0;
        ++pos;
    }
    if (pos == free_val_.size()) {
        if (!advance_profile())
            done_ = true;
        else
            fresh_profile_ = true;
    }
    return s;
}

std::vector<Subspace> all_subspaces(int n, int m, const gf::Gf& field, std::uint64_t enum_cap) {
    const BigInt count = gaussian_binomial(n, m, field.q());
    if (count > enum_cap)
        fail(Errc::size_limit_exceeded,
             "enumeration of " + count.str() + " subspaces exceeds the cap of " + std::to_string(enum_cap));
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(count));
    SubspaceStream stream(n, m, field);
    while (auto s = stream.next()) out.push_back(std::move(*s));
    return out;
}

ProjectivePoint normalize_projective(std::span<const std::uint32_t> v, const gf::Gf& field) {
    std::size_t first = 0;
    while (first < v.size() && v[first] == 0) ++first;
    if (first == v.size()) fail(Errc::zero_vector, "normalize_projective: zero vector");
    const std::uint32_t scale = field.inv(v[first]);
    ProjectivePoint p;
    p.coords.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p.coords[i] = field.mul(scale, v[i]);
    return p;
}

std::uint64_t vector_code(std::span<const std::uint32_t> v, std::uint64_t q) {
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * q + v[i];
    return code;
}

bool lex_less(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vec flatten(const gf::FieldElement& a, const gf::FieldCtx&) {
    // Coefficients w.r.t. the polynomial basis are exactly the one-level
    // coordinate vector: e digits over F_p at mid, d codes over F_q at top.
    return a.coeffs;
}

Vec flatten_to_prime(const gf::FieldElement& a, const gf::FieldCtx& ctx) {
    if (a.level != gf::Level::top) return a.coeffs;
    Vec out;
    out.reserve(std::size_t(ctx.d()) * ctx.e());
    for (auto c : a.coeffs) {
        const auto digits = ctx.mid().digits(c);
        out.insert(out.end(), digits.begin(), digits.end());
    }
    return out;
}

Subspace element_span_to_subspace(std::span<const gf::FieldElement> xs, const gf::FieldCtx& ctx) {
    if (xs.empty()) fail(Errc::dependent_input, "element_span_to_subspace: empty input");
    FqMatrix m(static_cast<int>(xs.size()), static_cast<int>(ctx.d()));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].level != gf::Level::top)
            fail(Errc::level_mismatch, "element_span_to_subspace: top-level elements expected");
        const Vec row = flatten(xs[i], ctx);
        std::copy(row.begin(), row.end(), m.a.begin() + i * row.size());
    }
    FqMatrix work = m;
    if (rref_in_place(work, ctx.mid()) < static_cast<int>(xs.size()))
        fail(Errc::dependent_input, "element_span_to_subspace: F_q-dependent input");
    Subspace s{m.cols, m.rows, {}};
    s.rows.assign(work.a.begin(), work.a.begin() + std::size_t(m.rows) * m.cols);
    return s;
}

std::vector<ProjectivePoint> subspace_points(const Subspace& s, const gf::Gf& field) {
    std::map<std::uint64_t, ProjectivePoint> seen;
    std::vector<std::uint32_t> combo(s.dim, 0);
    Vec v(s.ambient);
    while (true) {
        // next nonzero coefficient tuple
        std::size_t pos = 0;
        while (pos < combo.size()) {
            if (++combo[pos] < field.q()) break;
            combo[pos] = 0;
            ++pos;
        }
        if (pos == combo.size()) break;
        std::fill(v.begin(), v.end(), 0);
        for (int i = 0; i < s.dim; ++i) {
            if (combo[i] == 0) continue;
            for (int j = 0; j < s.ambient; ++j)
                v[j] = field.add(v[j], field.mul(combo[i], s.row(i)[j]));
        }
        ProjectivePoint p = normalize_projective(v, field);
        seen.emplace(vector_code(p.coords, field.q()), std::move(p));
    }
    std::vector<ProjectivePoint> out;
    out.reserve(seen.size());
    for (auto& [code, p] : seen) out.push_back(std::move(p));
    return out;
}

} // namespace grcol::linalg
