#include "grcol/spreads.hpp"

#include <map>
#include <set>

namespace grcol::spreads {

SpreadVerdict classify_class(std::span<const linalg::Subspace> lines, const gf::Gf& field) {
    SpreadVerdict v;
    v.size = lines.size();
    if (lines.empty()) {
        v.is_partial_spread = true;
        return v;
    }
    const int ambient = lines.front().ambient;
    for (const auto& l : lines)
        if (l.dim != 2 || l.ambient != ambient)
            fail(Errc::dim_mismatch, "classify_class: expects lines of one ambient space");

    v.is_partial_spread = true;
    for (std::size_t i = 0; i < lines.size() && v.is_partial_spread; ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (linalg::intersect_dim(lines[i], lines[j], field) != 0) {
                v.is_partial_spread = false;
                break;
            }

    std::set<std::uint64_t> covered;
    for (const auto& l : lines)
        for (const auto& p : linalg::subspace_points(l, field))
            covered.insert(linalg::vector_code(p.coords, field.q()));
    v.points_covered = covered.size();

    const linalg::BigInt total = linalg::gaussian_binomial(ambient, 1, field.q());
    v.is_spread = v.is_partial_spread && linalg::BigInt(v.points_covered) == total;
    return v;
}

ParallelismSummary classify_coloring(const graphs::GraphHandle& g, std::span<const std::uint64_t> color_of) {
    if (g.family == graphs::Family::johnson || g.m != 2)
        fail(Errc::not_lines, "classify_coloring: needs a coloring of 2-spaces");

    std::map<std::uint64_t, std::vector<linalg::Subspace>> classes;
    for (std::size_t i = 0; i < color_of.size(); ++i) classes[color_of[i]].push_back(g.subspaces[i]);

    ParallelismSummary s;
    s.classes = classes.size();
    for (const auto& [color, lines] : classes) {
        const SpreadVerdict v = classify_class(lines, *g.field);
        if (v.is_partial_spread) ++s.partial_spread_classes;
        if (v.is_spread) ++s.spread_classes;
    }
    s.is_parallelism = s.classes > 0 && s.spread_classes == s.classes;
    return s;
}

} // namespace grcol::spreads
