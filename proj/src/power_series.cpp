#include "chains/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chains {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, 0) {}

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("PowerSeries: need at least one coefficient");
    }
}

PowerSeries PowerSeries::from_integers(std::span<const mpz_class> coeffs, std::size_t order) {
    PowerSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) {
        s.coeffs_[i] = coeffs[i];
    }
    return s;
}

PowerSeries PowerSeries::x_over_one_minus_x_pow(std::size_t k, std::size_t order) {
    PowerSeries s(order);
    if (k == 0) {
        s.coeffs_[0] = 1;
        return s;
    }
    mpz_class binom;
    for (std::size_t j = 0; k + j <= order; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), k - 1 + j, j);
        s.coeffs_[k + j] = binom;
    }
    return s;
}

PowerSeries PowerSeries::vee_factor(std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    mpz_class pow = 1;
    for (std::size_t j = 1; j <= order; ++j) {
        s.coeffs_[j] = pow;
        pow *= 2;
    }
    return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    std::vector<mpq_class> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order, this->order()) + 1));
    c.resize(order + 1, 0);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::inverse() const {
    if (sgn(coeffs_[0]) == 0) {
        throw std::domain_error("PowerSeries::inverse: zero constant term");
    }
    PowerSeries inv(order());
    inv.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += coeffs_[i] * inv.coeffs_[k - i];
        }
        inv.coeffs_[k] = -acc / coeffs_[0];
    }
    return inv;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= r.order(); ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

std::vector<mpz_class> substitute_one_minus_x(std::span<const mpz_class> p) {
    // p(1 - x) = sum_i p_i sum_j C(i, j) (-x)^j
    std::vector<mpz_class> out(p.size(), 0);
    mpz_class binom;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), i, j);
            if (j % 2 == 0) {
                out[j] += p[i] * binom;
            } else {
                out[j] -= p[i] * binom;
            }
        }
    }
    return out;
}

}  // namespace chains
