#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chains/formula.hpp"

namespace chains {

// Sign matrix of a chain: entry (i, j), 0 <= i < j <= n, is +1 when the
// segment p_i p_j lies above the chain curve, -1 below, 0 for chain edges.
// Stored densely as a packed upper triangle of signed bytes.
class VisibilityTriangle {
public:
    static constexpr std::size_t kDefaultMaxEdges = 4096;

    explicit VisibilityTriangle(std::size_t edges);

    std::size_t edges() const noexcept { return n_; }
    std::int8_t at(std::size_t i, std::size_t j) const { return cells_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, std::int8_t v) { cells_[index(i, j)] = v; }

    // Chain edges are 0 and every other entry is +1 or -1.
    bool well_formed() const;
    VisibilityTriangle negated() const;

    friend bool operator==(const VisibilityTriangle&, const VisibilityTriangle&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept {
        return i * n_ - i * (i - 1) / 2 + (j - i - 1);
    }

    std::size_t n_;
    std::vector<std::int8_t> cells_;
};

// Throws CapExceeded when f has more than max_edges edges.
VisibilityTriangle visibility(const Formula& f,
                              std::size_t max_edges = VisibilityTriangle::kDefaultMaxEdges);

// Inverse of visibility(). Throws NotRealizable when no chain has this
// triangle.
Formula formula_from_visibility(const VisibilityTriangle& v);

}  // namespace chains
