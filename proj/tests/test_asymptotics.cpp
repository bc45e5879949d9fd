#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "chains/asymptotics.hpp"
#include "chains/builders.hpp"
#include "chains/enumerate.hpp"
#include "chains/power_series.hpp"
#include "chains/tri_poly.hpp"

using namespace chains;

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// 1 - (x/(1-x))^{k+1} expanded by hand: (x/(1-x))^{p} = sum_j C(p-1+j, j) x^{p+j}.
std::vector<mpq_class> cave_phi(unsigned long k, std::size_t order) {
    std::vector<mpq_class> c(order + 1, 0);
    c[0] = 1;
    const unsigned long p = k + 1;
    for (std::size_t j = 0; p + j <= order; ++j) {
        c[p + j] -= binomial(p - 1 + j, j);
    }
    return c;
}

std::vector<Formula> small_chains(std::uint64_t max_n) {
    std::vector<Formula> all;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const auto c = enumerate_chains(n);
        all.insert(all.end(), c.begin(), c.end());
    }
    return all;
}

}  // namespace

TEST_CASE("growth constants of small base chains") {
    const auto e = lambda_tau(prim(), NumberMode::exact);
    CHECK(e.m == 1);
    CHECK(e.lambda == doctest::Approx(4.0));
    CHECK(e.tau == doctest::Approx(2.0));
    CHECK(e.lambda_tau == doctest::Approx(8.0));

    const auto sums = growth_sums(tri_poly<mpz_class>(vex(4)));
    CHECK(sums.lambda_pow == 80);
    CHECK(sums.tau_pow == 70);
    const auto v4 = growth_report(sums);
    CHECK(v4.lambda_tau == doctest::Approx(8.6506154).epsilon(1e-8));

    const auto k1 = lambda_tau(koch(1), NumberMode::exact);
    CHECK(k1.lambda == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
    CHECK(k1.tau == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
    CHECK(k1.lambda_tau == doctest::Approx(8.485281).epsilon(1e-7));
}

TEST_CASE("lambda bar is lambda of the flipped base") {
    for (const auto& f : small_chains(5)) {
        const auto r = lambda_tau(f, NumberMode::exact);
        const auto flipped = lambda_tau(flip(f), NumberMode::exact);
        CHECK(r.lambda_bar == doctest::Approx(flipped.lambda).epsilon(1e-14));
        CHECK(r.lambda_lambda_bar == doctest::Approx(r.lambda * r.lambda_bar).epsilon(1e-14));
    }
}

TEST_CASE("exact and extended float growth reports agree") {
    for (unsigned s = 0; s <= 9; ++s) {
        const auto a = lambda_tau(koch(s), NumberMode::exact);
        const auto b = lambda_tau(koch(s), NumberMode::extfloat);
        CHECK(a.lambda == doctest::Approx(b.lambda).epsilon(1e-13));
        CHECK(a.tau == doctest::Approx(b.tau).epsilon(1e-13));
        CHECK(a.lambda_lambda_bar == doctest::Approx(b.lambda_lambda_bar).epsilon(1e-13));
    }
}

TEST_CASE("entropy maximum") {
    const std::vector<double> even{1, 1};
    const auto r = entropy_max(even);
    CHECK(r.value == 2.0);
    CHECK(r.weights == std::vector<double>{0.5, 0.5});
    const auto r2 = entropy_max(std::vector<double>{3, 1});
    CHECK(r2.value == 4.0);
    CHECK(r2.weights == std::vector<double>{0.75, 0.25});
    const auto r3 = entropy_max(std::vector<double>{5});
    CHECK(r3.value == 5.0);
    CHECK(r3.weights == std::vector<double>{1.0});
    CHECK(entropy_max(std::vector<double>{0, 2}).weights[0] == 0.0);
    CHECK_THROWS_AS(entropy_max(std::vector<double>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(entropy_max(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(entropy_max(std::vector<double>{-1, 2}), std::invalid_argument);
}

TEST_CASE("entropy maximum matches a grid search") {
    const std::vector<std::vector<double>> inputs{{1.0, 2.0}, {0.5, 3.0, 1.5}, {4.0, 0.0, 1.0}, {2.0, 2.0, 2.0}};
    const int steps = 1000;
    for (const auto& u : inputs) {
        double best = 0;
        std::vector<double> alpha(u.size());
        for (int i = 0; i <= steps; ++i) {
            if (u.size() == 2) {
                alpha = {i / 1000.0, (steps - i) / 1000.0};
                best = std::max(best, entropy_objective(alpha, u));
                continue;
            }
            for (int j = 0; i + j <= steps; ++j) {
                alpha = {i / 1000.0, j / 1000.0, (steps - i - j) / 1000.0};
                best = std::max(best, entropy_objective(alpha, u));
            }
        }
        const auto r = entropy_max(u);
        CHECK(std::abs(best - r.value) <= 1e-5);
        CHECK(entropy_objective(r.weights, u) == doctest::Approx(r.value).epsilon(1e-12));
    }
}

TEST_CASE("phi of small chains") {
    const auto e = phi_series(prim(), 4);
    CHECK(e.coeffs() == std::vector<mpq_class>{1, 0, -1, -2, -3});
    for (unsigned long k = 1; k <= 6; ++k) {
        CHECK(phi_series(cave(k), 12).coeffs() == cave_phi(k, 12));
    }
    CHECK_THROWS_AS(phi_series(vex(4), 3), std::invalid_argument);
}

TEST_CASE("phi agrees with T up to x^n") {
    for (const auto& f : small_chains(7)) {
        const auto t = tri_poly<mpz_class>(f);
        const auto phi = phi_series(f, f.edges() + 2);
        for (std::size_t i = 0; i < f.edges(); ++i) {
            CHECK(phi[i] == t.upper.coeffs[i]);
        }
        // The x^n coefficient of T is zero.
        CHECK(phi[f.edges()] == 0);
        if (f.is_upward()) {
            CHECK(phi[f.edges() - 1] == t.upper.leading());
        }
    }
}

TEST_CASE("phi is multiplicative under convex sums") {
    std::mt19937_64 rng(7);
    const auto pool = small_chains(7);
    int checked = 0;
    while (checked < 200) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        if (a.edges() + b.edges() > 8) {
            continue;
        }
        const std::size_t order = a.edges() + b.edges();
        const auto lhs = phi_series(vee(a, b), order);
        const auto rhs = PowerSeries::vee_factor(order) * phi_series(a, order) * phi_series(b, order);
        CHECK(lhs == rhs);
        ++checked;
    }
}

TEST_CASE("power series arithmetic") {
    PowerSeries one_minus_x(std::vector<mpq_class>{1, -1, 0, 0, 0});
    const auto inv = one_minus_x.inverse();
    CHECK(inv.coeffs() == std::vector<mpq_class>{1, 1, 1, 1, 1});
    const auto prod = inv * one_minus_x;
    CHECK(prod.coeffs() == std::vector<mpq_class>{1, 0, 0, 0, 0});
    PowerSeries one_minus_2x(std::vector<mpq_class>{1, -2, 0, 0, 0});
    CHECK(PowerSeries::vee_factor(4) == one_minus_x * one_minus_2x.inverse());
    CHECK((PowerSeries::x_over_one_minus_x_pow(2, 4)).coeffs() == std::vector<mpq_class>{0, 0, 1, 2, 3});
    CHECK_THROWS_AS(PowerSeries(std::vector<mpq_class>{0, 1}).inverse(), std::domain_error);
    const std::vector<mpz_class> p{1, 2, 3};  // 1 + 2x + 3x^2 at 1 - x = 6 - 8x + 3x^2
    CHECK(substitute_one_minus_x(p) == std::vector<mpz_class>{6, -8, 3});
}

TEST_CASE("gdc upper bound") {
    const std::vector<std::uint64_t> two{2};
    CHECK(gdc_upper_bound(two) == ExtNum(16));
    CHECK(counts<mpz_class>(gdc(two)).upper == 1);
    const std::vector<std::uint64_t> zero_one{0, 1};
    CHECK(gdc_upper_bound(zero_one) == ExtNum(12));
    CHECK(counts<mpz_class>(gdc(zero_one)).upper == 1);
    const std::vector<std::uint64_t> one_one{1, 1};
    CHECK(gdc_upper_bound(one_one) == ExtNum(48));
    CHECK(counts<mpz_class>(gdc(one_one)).upper <= 48);
    const std::vector<std::uint64_t> mix{3, 2, 1, 2};
    CHECK(counts<mpz_class>(gdc(mix)).upper <= gdc_upper_bound_exact(mix));
    CHECK(gdc_upper_bound(mix).to_mpq() == mpq_class(gdc_upper_bound_exact(mix)));
}

TEST_CASE("copy bounds") {
    const auto k = copy_bounds(koch(1), 2, koch(2));
    CHECK(k.lower_upper == 1);
    CHECK(k.upper_upper == 5);
    CHECK(counts<mpz_class>(koch(2)).upper == 2);
    CHECK(k.lower_total == 1);
    CHECK(k.upper_total == 10);
    CHECK(counts<mpz_class>(koch(2)).total == 2);

    const auto v = copy_bounds(prim(), 3, vex(3));
    CHECK(v.lower_upper == 1);
    CHECK(v.upper_upper == 2);
    CHECK(counts<mpz_class>(vex(3)).upper == 2);

    CHECK_THROWS_AS(copy_bounds(koch(1), 3, koch(2)), std::invalid_argument);

    // Any convex or concave arrangement of copies stays inside the bounds.
    const auto base = vee(prim(), cave(2));
    const auto b = copy_bounds(base, 3, poly(base, 3));
    for (const auto& c : {make_sum(NodeKind::vee, {base, base, base}), make_sum(NodeKind::wedge, {base, base, base}),
                          vee(wedge(base, base), base), wedge(base, vee(base, base))}) {
        const auto counted = counts<mpz_class>(c);
        CHECK(b.lower_upper <= counted.upper);
        CHECK(counted.upper <= b.upper_upper);
        CHECK(b.lower_total <= counted.total);
        CHECK(counted.total <= b.upper_total);
    }
}

TEST_CASE("multinomial expansion of poly chains") {
    // With one copy poly(C0, 1) = flip(C0) is not a convex sum; the expansion
    // then counts every partial triangulation of flip(C0).
    CHECK(poly_upper_by_multinomial(koch(2), 1) == 4);
    for (const auto& base : {vex(2), cave(2)}) {
        for (std::uint64_t n = 2; n <= 4; ++n) {
            CHECK(poly_upper_by_multinomial(base, n) == counts<mpz_class>(poly(base, n)).upper);
        }
    }
    for (const auto& base : {vee(prim(), cave(2)), koch(2)}) {
        for (std::uint64_t n = 2; n <= 3; ++n) {
            CHECK(poly_upper_by_multinomial(base, n) == counts<mpz_class>(poly(base, n)).upper);
        }
    }
}

TEST_CASE("gamma expansion of twin chains") {
    for (const auto& base : {prim(), vex(2)}) {
        for (std::uint64_t n = 1; n <= 3; ++n) {
            CHECK(twin_upper_by_gamma(base, n) == counts<mpz_class>(twin(base, n)).upper);
        }
    }
    CHECK(twin_upper_by_gamma(koch(2), 2) == counts<mpz_class>(twin(koch(2), 2)).upper);
}

TEST_CASE("poly counts approach lambda from below") {
    for (const auto& base : {prim(), vex(2), koch(1), koch(2)}) {
        const auto growth = lambda_tau(base, NumberMode::exact);
        double previous = 0;
        for (std::uint64_t n = 1; n <= 8; ++n) {
            const auto c = counts<mpz_class>(poly(base, n));
            const double ratio = c.root_upper / growth.lambda;
            CHECK(ratio <= 1.0);
            CHECK(ratio >= previous - 1e-15);
            previous = ratio;
        }
        CHECK(previous >= 0.5);
    }
}
