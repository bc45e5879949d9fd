#pragma once

// Growth constants of poly and twin chains, the gdc upper bound, the entropy
// maximum and the phi generating function.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "chains/extnum.hpp"
#include "chains/formula.hpp"
#include "chains/power_series.hpp"
#include "chains/tri_poly.hpp"

namespace chains {

struct GrowthReport {
    std::uint64_t m = 0;
    double lambda = 0;
    double tau = 0;
    double lambda_tau = 0;
    double lambda_bar = 0;
    double lambda_lambda_bar = 0;
};

// The m-th powers behind a GrowthReport, before taking roots:
//   lambda^m     = sum_{k=1..m} 2^k (k+1) t_{m-k}(flip C0)
//   tau^m        = sum_{k=1..m} 2^k t_{m-k}(C0)
//   lambda_bar^m = sum_{k=1..m} 2^k (k+1) t_{m-k}(C0)
template <class Num>
struct GrowthSums {
    std::uint64_t m = 0;
    Num lambda_pow{0};
    Num tau_pow{0};
    Num lambda_bar_pow{0};
};

template <class Num>
GrowthSums<Num> growth_sums(const PolyPair<Num>& base);

template <class Num>
GrowthReport growth_report(const GrowthSums<Num>& sums);

GrowthReport lambda_tau(const Formula& base, NumberMode mode);
GrowthReport lambda_tau(const Formula& base);

struct EntropyMax {
    double value = 0;
    std::vector<double> weights;
};

// max over the simplex of e^{H(alpha)} prod u_k^{alpha_k}, attained at
// alpha_k = u_k / sum u. Throws std::invalid_argument for empty, negative or
// all-zero input.
EntropyMax entropy_max(std::span<const double> u);
// e^{H(alpha)} prod u_k^{alpha_k} with 0 ln 0 = 0.
double entropy_objective(std::span<const double> alpha, std::span<const double> u);

// phi_F(x) = T_F(x) - (x / (1 - x))^{n+1} T_F(1 - x), truncated after x^order.
// Requires order >= n.
PowerSeries phi_series(const Formula& f, std::size_t order);

// prod_k (2^k (k+1))^{N_k}, an upper bound on U(gdc(N_1, ..., N_m)).
ExtNum gdc_upper_bound(std::span<const std::uint64_t> counts);
mpz_class gdc_upper_bound_exact(std::span<const std::uint64_t> counts);

struct CopyBounds {
    mpz_class lower_upper;  // U(C0)^N
    mpz_class upper_upper;  // U(poly(flip C0, N))
    mpz_class lower_total;  // tr(C0)^N
    mpz_class upper_total;  // U(poly(C0, N)) U(poly(flip C0, N))
};

// Bounds for a chain C assembled from N copies of C0. Only the edge count
// n(C) = N n(C0) is checked; a mismatch throws std::invalid_argument.
CopyBounds copy_bounds(const Formula& base, std::uint64_t copies, const Formula& chain);

// U(poly(C0, N)) expanded over compositions a of N:
//   sum_a multinomial(N; a) prod_k t_{m-k}(flip C0)^{a_k} U(gdc(a)).
mpz_class poly_upper_by_multinomial(const Formula& base, std::uint64_t copies);

// U(twin(C0, N)) = sum_{k1,k2} g_{k1} g_{k2} C(2mN - k1 - k2, mN - k1) with
// g_k the coefficient of x^k in T_{C0}(x)^N.
mpz_class twin_upper_by_gamma(const Formula& base, std::uint64_t copies);

extern template GrowthSums<mpz_class> growth_sums(const PolyPair<mpz_class>&);
extern template GrowthSums<ExtNum> growth_sums(const PolyPair<ExtNum>&);
extern template GrowthReport growth_report(const GrowthSums<mpz_class>&);
extern template GrowthReport growth_report(const GrowthSums<ExtNum>&);

}  // namespace chains
