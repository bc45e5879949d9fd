#pragma once

#include <cstddef>

#include "chains/tri_poly.hpp"
#include "chains/visibility.hpp"

namespace chains {

inline constexpr std::size_t kOracleMaxEdges = 64;

// T_C computed from the visibility triangle alone, without any formula:
// N(i,k), the number of triangulations of the pocket between the upper edge
// p_i p_k and the chain curve, satisfies N(i,i+1) = 1 and
// N(i,k) = sum over apexes j with p_i p_j, p_j p_k upper or chain edges of
// N(i,j) N(j,k). T_C then sums, over x-monotone curves of upper and chain
// edges from p_0 to p_n, the product of N(a,b) x^{b-a-1} along the curve.
// Cubic time. Throws CapExceeded above kOracleMaxEdges and NotRealizable on
// a malformed triangle.
ExactPoly oracle_tripoly(const VisibilityTriangle& v);

}  // namespace chains
