#pragma once

// Coefficient kernels behind the triangulation-polynomial engine.
//
// Inputs are ascending coefficient vectors t_0..t_{n-1} of two chains with
// n1 and n2 edges. Both kernels return n1 + n2 coefficients.
//
//   wedge_combine: T_{C1 ^ C2} = T_{C1} * T_{C2} (zero padded).
//   vee_combine:   T_{C1 v C2} via the bridge recurrence
//                  DP[l][r] = t_{n1-l-1}(C1) t_{n2-r-1}(C2) + DP[l+1][r] + DP[l][r+1]
//                  with DP[n1][.] = DP[.][n2] = 0, adding DP[l][r] to the
//                  coefficient of x^{n1+n2-l-r-1} on top of the product.
//
// `serial` is the straightforward row-by-row reference. `parallel` walks the
// DP by anti-diagonals (each cell on diagonal d = l + r depends only on
// diagonal d + 1, and every cell on it feeds the same coefficient) with
// OpenMP. Diagonal sums are reduced in fixed blocks of kReductionBlock cells
// in ascending order, so results are bit-identical for any thread count.
// For exact coefficients both variants agree exactly; for ExtNum they agree
// up to rounding.
//
// Instantiated for mpz_class and ExtNum.

#include <cstddef>
#include <span>
#include <vector>

namespace chains::kernels {

inline constexpr std::size_t kReductionBlock = 256;

namespace serial {

template <class Num>
std::vector<Num> wedge_combine(std::span<const Num> lhs, std::span<const Num> rhs);

template <class Num>
std::vector<Num> vee_combine(std::span<const Num> lhs, std::span<const Num> rhs);

}  // namespace serial

namespace parallel {

template <class Num>
std::vector<Num> wedge_combine(std::span<const Num> lhs, std::span<const Num> rhs);

template <class Num>
std::vector<Num> vee_combine(std::span<const Num> lhs, std::span<const Num> rhs);

}  // namespace parallel

}  // namespace chains::kernels
