#include "chains/visibility.hpp"

#include <string>

#include "chains/errors.hpp"

namespace chains {

namespace {

void fill(const Formula& f, std::size_t base, VisibilityTriangle& v) {
    if (f.is_prim()) {
        v.set(base, base + 1, 0);
        return;
    }
    const std::int8_t sign = f.kind() == NodeKind::vee ? 1 : -1;
    const std::size_t end = base + f.edges();
    std::size_t lo = base;
    for (const auto& child : f.children()) {
        fill(child, lo, v);
        const std::size_t hi = lo + child.edges();
        // Every segment from inside this child to a point past its end
        // passes over the joint at `hi`.
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = hi + 1; j <= end; ++j) {
                v.set(i, j, sign);
            }
        }
        lo = hi;
    }
}

Formula rebuild(const VisibilityTriangle& v, std::size_t lo, std::size_t hi) {
    if (hi == lo + 1) {
        return prim();
    }
    const std::int8_t sign = v.at(lo, hi);
    // `reach[a]` is the farthest b whose segment (a, b) disagrees with the
    // top-level sign; a split point m must not lie under such a segment.
    std::size_t reach = lo;
    std::vector<std::size_t> splits{lo};
    for (std::size_t m = lo + 1; m < hi; ++m) {
        const std::size_t a = m - 1;
        for (std::size_t b = a + 2; b <= hi; ++b) {
            if (v.at(a, b) != sign && b > reach) {
                reach = b;
            }
        }
        if (reach <= m) {
            splits.push_back(m);
        }
    }
    splits.push_back(hi);
    if (splits.size() < 3) {
        throw NotRealizable("visibility triangle has no valid split in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    std::vector<Formula> parts;
    parts.reserve(splits.size() - 1);
    for (std::size_t k = 0; k + 1 < splits.size(); ++k) {
        parts.push_back(rebuild(v, splits[k], splits[k + 1]));
    }
    return make_sum(sign > 0 ? NodeKind::vee : NodeKind::wedge, std::move(parts));
}

}  // namespace

VisibilityTriangle::VisibilityTriangle(std::size_t edges) : n_(edges), cells_(edges * (edges + 1) / 2, 0) {}

bool VisibilityTriangle::well_formed() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, i + 1) != 0) {
            return false;
        }
        for (std::size_t j = i + 2; j <= n_; ++j) {
            const auto s = at(i, j);
            if (s != 1 && s != -1) {
                return false;
            }
        }
    }
    return true;
}

VisibilityTriangle VisibilityTriangle::negated() const {
    VisibilityTriangle r = *this;
    for (auto& c : r.cells_) {
        c = static_cast<std::int8_t>(-c);
    }
    return r;
}

VisibilityTriangle visibility(const Formula& f, std::size_t max_edges) {
    if (f.edges() > max_edges) {
        throw CapExceeded("visibility: " + std::to_string(f.edges()) + " edges exceeds cap " +
                          std::to_string(max_edges));
    }
    VisibilityTriangle v(static_cast<std::size_t>(f.edges()));
    fill(f, 0, v);
    return v;
}

Formula formula_from_visibility(const VisibilityTriangle& v) {
    if (v.edges() == 0 || !v.well_formed()) {
        throw NotRealizable("visibility triangle is not well formed");
    }
    auto f = rebuild(v, 0, v.edges());
    if (!(visibility(f, v.edges()) == v)) {
        throw NotRealizable("visibility triangle is not realized by any chain");
    }
    return f;
}

}  // namespace chains
