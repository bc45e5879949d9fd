#pragma once

// Exact geometric realizations of chains and brute-force triangulation
// counting on explicit point sets.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "chains/formula.hpp"
#include "chains/visibility.hpp"

namespace chains {

struct RationalPoint {
    mpq_class x;
    mpq_class y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Points in chain order, strictly increasing x.
struct RationalPointSet {
    std::vector<RationalPoint> points;

    friend bool operator==(const RationalPointSet&, const RationalPointSet&) = default;
};

inline constexpr std::size_t kRealizeMaxEdges = 32;
inline constexpr std::size_t kCountMaxPoints = 10;

// +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);

// Point set from (-1, 0) to (1, 0) whose triple orientations reproduce
// visibility(f): p_i p_j p_k (i < j < k) is counter-clockwise iff V(i,k) = +1.
// Sums place their summands, flattened by a factor eps, along a strictly
// convex (Vee) or concave (Wedge) polyline; eps starts at 1/4 and is halved
// per node until every triple of that node checks out exactly.
RationalPointSet realize(const Formula& f);

// True when x is strictly increasing and every triple orientation matches v.
bool realizes(const RationalPointSet& points, const VisibilityTriangle& v);

// Header "x_num,x_den,y_num,y_den", one row per point.
std::string to_csv(const RationalPointSet& points);
RationalPointSet from_csv(std::string_view text);

// Number of triangulations (maximal crossing-free edge sets) by
// include/exclude backtracking over all segments. At most kCountMaxPoints
// points; a collinear triple throws DegenerateInput.
mpz_class count_triangulations_points(const RationalPointSet& points);

}  // namespace chains
