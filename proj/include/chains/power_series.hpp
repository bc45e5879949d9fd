#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace chains {

// Formal power series over the rationals truncated after x^order. Binary
// operations truncate to the smaller order of their operands.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order);
    explicit PowerSeries(std::vector<mpq_class> coeffs);

    // Polynomial with integer coefficients, truncated or zero-padded.
    static PowerSeries from_integers(std::span<const mpz_class> coeffs, std::size_t order);
    // (x / (1 - x))^k = sum_j C(k - 1 + j, j) x^{k+j}.
    static PowerSeries x_over_one_minus_x_pow(std::size_t k, std::size_t order);
    // (1 - x) / (1 - 2x) = 1 + sum_{j>=1} 2^{j-1} x^j.
    static PowerSeries vee_factor(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }
    mpq_class& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const;
    // Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<mpq_class> coeffs_;
};

// The polynomial p(1 - x) for integer coefficients p, as exact coefficients.
std::vector<mpz_class> substitute_one_minus_x(std::span<const mpz_class> p);

}  // namespace chains
