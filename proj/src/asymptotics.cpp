#include "chains/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "chains/builders.hpp"

namespace chains {

namespace {

mpz_class weight(std::uint64_t k, std::uint64_t factor, mpz_class*) {
    mpz_class w = factor;
    mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), k);
    return w;
}

ExtNum weight(std::uint64_t k, std::uint64_t factor, ExtNum*) {
    return ExtNum::pow2(static_cast<std::int64_t>(k)) * ExtNum(factor);
}

ExactPoly poly_pow(const ExactPoly& p, std::uint64_t e) {
    std::vector<mpz_class> acc{1};
    for (std::uint64_t i = 0; i < e; ++i) {
        std::vector<mpz_class> next(acc.size() + p.coeffs.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a) {
            for (std::size_t b = 0; b < p.coeffs.size(); ++b) {
                mpz_addmul(next[a + b].get_mpz_t(), acc[a].get_mpz_t(), p.coeffs[b].get_mpz_t());
            }
        }
        acc = std::move(next);
    }
    return {std::move(acc)};
}

// Visits every composition of `total` into `parts` nonnegative parts.
template <class Visit>
void for_each_composition(std::uint64_t total, std::size_t parts, std::vector<std::uint64_t>& a,
                          std::size_t pos, Visit&& visit) {
    if (pos + 1 == parts) {
        a[pos] = total;
        visit(a);
        return;
    }
    for (std::uint64_t v = 0; v <= total; ++v) {
        a[pos] = v;
        for_each_composition(total - v, parts, a, pos + 1, visit);
    }
}

}  // namespace

template <class Num>
GrowthSums<Num> growth_sums(const PolyPair<Num>& base) {
    GrowthSums<Num> s;
    s.m = base.upper.edges();
    const auto& t = base.upper.coeffs;
    const auto& t_flip = base.lower.coeffs;
    for (std::uint64_t k = 1; k <= s.m; ++k) {
        const Num w_lambda = weight(k, k + 1, static_cast<Num*>(nullptr));
        const Num w_tau = weight(k, 1, static_cast<Num*>(nullptr));
        s.lambda_pow += w_lambda * t_flip[s.m - k];
        s.tau_pow += w_tau * t[s.m - k];
        s.lambda_bar_pow += w_lambda * t[s.m - k];
    }
    return s;
}

template <class Num>
GrowthReport growth_report(const GrowthSums<Num>& sums) {
    GrowthReport r;
    r.m = sums.m;
    r.lambda = root_of(sums.lambda_pow, sums.m);
    r.tau = root_of(sums.tau_pow, sums.m);
    r.lambda_bar = root_of(sums.lambda_bar_pow, sums.m);
    // Products of roots are roots of products; taking one root of the
    // product keeps a single rounding.
    r.lambda_tau = root_of(Num(sums.lambda_pow * sums.tau_pow), sums.m);
    r.lambda_lambda_bar = root_of(Num(sums.lambda_pow * sums.lambda_bar_pow), sums.m);
    return r;
}

GrowthReport lambda_tau(const Formula& base, NumberMode mode) {
    if (mode == NumberMode::exact) {
        return growth_report(growth_sums(tri_poly<mpz_class>(base)));
    }
    return growth_report(growth_sums(tri_poly<ExtNum>(base)));
}

GrowthReport lambda_tau(const Formula& base) { return lambda_tau(base, default_mode(base.edges())); }

EntropyMax entropy_max(std::span<const double> u) {
    if (u.empty()) {
        throw std::invalid_argument("entropy_max: empty input");
    }
    double sum = 0;
    for (double v : u) {
        if (!(v >= 0) || !std::isfinite(v)) {
            throw std::invalid_argument("entropy_max: values must be finite and nonnegative");
        }
        sum += v;
    }
    if (sum == 0) {
        throw std::invalid_argument("entropy_max: all values are zero");
    }
    EntropyMax r{sum, {}};
    r.weights.reserve(u.size());
    for (double v : u) {
        r.weights.push_back(v / sum);
    }
    return r;
}

double entropy_objective(std::span<const double> alpha, std::span<const double> u) {
    if (alpha.size() != u.size()) {
        throw std::invalid_argument("entropy_objective: size mismatch");
    }
    double log_value = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (alpha[k] == 0) {
            continue;
        }
        if (u[k] == 0) {
            return 0;
        }
        log_value += alpha[k] * (std::log(u[k]) - std::log(alpha[k]));
    }
    return std::exp(log_value);
}

PowerSeries phi_series(const Formula& f, std::size_t order) {
    const std::uint64_t n = f.edges();
    if (order < n) {
        throw std::invalid_argument("phi_series: order must be at least the edge count");
    }
    const auto t = tri_poly<mpz_class>(f).upper.coeffs;
    const auto t_reflected = substitute_one_minus_x(t);
    const auto lhs = PowerSeries::from_integers(t, order);
    const auto rhs = PowerSeries::x_over_one_minus_x_pow(n + 1, order) *
                     PowerSeries::from_integers(t_reflected, order);
    return lhs - rhs;
}

mpz_class gdc_upper_bound_exact(std::span<const std::uint64_t> counts) {
    mpz_class bound = 1;
    mpz_class factor;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const std::uint64_t k = i + 1;
        factor = k + 1;
        mpz_mul_2exp(factor.get_mpz_t(), factor.get_mpz_t(), k);
        mpz_pow_ui(factor.get_mpz_t(), factor.get_mpz_t(), counts[i]);
        bound *= factor;
    }
    return bound;
}

ExtNum gdc_upper_bound(std::span<const std::uint64_t> counts) {
    ExtNum bound{1};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const std::uint64_t k = i + 1;
        const ExtNum factor = ExtNum::pow2(static_cast<std::int64_t>(k)) * ExtNum(k + 1);
        // Square-and-multiply keeps the rounding count logarithmic in N_k.
        ExtNum power{1};
        ExtNum base = factor;
        for (std::uint64_t e = counts[i]; e != 0; e >>= 1) {
            if ((e & 1U) != 0) {
                power *= base;
            }
            if (e > 1) {
                base *= base;
            }
        }
        bound *= power;
    }
    return bound;
}

CopyBounds copy_bounds(const Formula& base, std::uint64_t copies, const Formula& chain) {
    if (copies == 0 || chain.edges() != copies * base.edges()) {
        throw std::invalid_argument("copy_bounds: chain does not have N times the base edge count");
    }
    TriPolyEngine<mpz_class> engine;
    const auto base_counts = counts_of(engine.evaluate(base));
    CopyBounds b;
    mpz_pow_ui(b.lower_upper.get_mpz_t(), base_counts.upper.get_mpz_t(), copies);
    mpz_pow_ui(b.lower_total.get_mpz_t(), base_counts.total.get_mpz_t(), copies);
    const mpz_class poly_of_flip = engine.evaluate(poly(flip(base), copies)).upper.leading();
    const mpz_class poly_of_base = engine.evaluate(poly(base, copies)).upper.leading();
    b.upper_upper = poly_of_flip;
    b.upper_total = poly_of_base * poly_of_flip;
    return b;
}

mpz_class poly_upper_by_multinomial(const Formula& base, std::uint64_t copies) {
    if (copies == 0) {
        throw std::invalid_argument("poly_upper_by_multinomial: need at least one copy");
    }
    TriPolyEngine<mpz_class> engine;
    const auto& t_flip = engine.evaluate(base).lower.coeffs;
    const std::uint64_t m = t_flip.size();
    std::vector<mpz_class> factorial(copies + 1, 1);
    for (std::uint64_t i = 1; i <= copies; ++i) {
        factorial[i] = factorial[i - 1] * i;
    }
    mpz_class total = 0;
    std::vector<std::uint64_t> a(m, 0);
    for_each_composition(copies, m, a, 0, [&](const std::vector<std::uint64_t>& comp) {
        mpz_class term = factorial[copies];
        mpz_class power;
        for (std::uint64_t k = 1; k <= m; ++k) {
            term /= factorial[comp[k - 1]];
            mpz_pow_ui(power.get_mpz_t(), t_flip[m - k].get_mpz_t(), comp[k - 1]);
            term *= power;
        }
        if (sgn(term) == 0) {
            return;
        }
        term *= engine.evaluate(gdc(comp)).upper.leading();
        total += term;
    });
    return total;
}

mpz_class twin_upper_by_gamma(const Formula& base, std::uint64_t copies) {
    if (copies == 0) {
        throw std::invalid_argument("twin_upper_by_gamma: need at least one copy");
    }
    const auto t = tri_poly<mpz_class>(base).upper;
    const auto gamma = poly_pow(t, copies).coeffs;
    const std::uint64_t mn = t.edges() * copies;
    mpz_class total = 0;
    mpz_class binom;
    for (std::uint64_t k1 = 0; k1 < gamma.size(); ++k1) {
        for (std::uint64_t k2 = 0; k2 < gamma.size(); ++k2) {
            mpz_bin_uiui(binom.get_mpz_t(), 2 * mn - k1 - k2, mn - k1);
            total += gamma[k1] * gamma[k2] * binom;
        }
    }
    return total;
}

template GrowthSums<mpz_class> growth_sums(const PolyPair<mpz_class>&);
template GrowthSums<ExtNum> growth_sums(const PolyPair<ExtNum>&);
template GrowthReport growth_report(const GrowthSums<mpz_class>&);
template GrowthReport growth_report(const GrowthSums<ExtNum>&);

}  // namespace chains
