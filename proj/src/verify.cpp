#include "chains/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <omp.h>

#include "chains/asymptotics.hpp"
#include "chains/builders.hpp"
#include "chains/enumerate.hpp"
#include "chains/oracle.hpp"
#include "chains/realize.hpp"
#include "chains/tri_poly.hpp"
#include "chains/visibility.hpp"

namespace chains {

namespace {

// Point-set counting and the law suite grow fastest; full runs go one size
// further than quick ones.
constexpr std::uint64_t kGeometricCapQuick = 6;
constexpr std::uint64_t kGeometricCapFull = 7;
constexpr unsigned kNumericKochLevel = 10;
constexpr std::uint64_t kSeed = 0x5eed'c4a1'75ULL;

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& detail) {
        ++result_.checked;
        if (!ok) {
            if (result_.failures == 0) {
                result_.first_failure = detail();
            }
            ++result_.failures;
        }
    }

    SuiteResult finish() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

private:
    SuiteResult result_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string show(const std::vector<mpz_class>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i == 0 ? "" : ", ") << v[i];
    }
    out << ']';
    return out.str();
}

// Large Schroeder numbers S_0 = 1, S_k = S_{k-1} + sum_{i<k} S_i S_{k-1-i}.
std::vector<mpz_class> large_schroeder(std::size_t count) {
    std::vector<mpz_class> s(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        if (k == 0) {
            s[k] = 1;
            continue;
        }
        s[k] = s[k - 1];
        for (std::size_t i = 0; i < k; ++i) {
            s[k] += s[i] * s[k - 1 - i];
        }
    }
    return s;
}

SuiteResult enumeration_suite(std::uint64_t cap) {
    Suite suite("enumeration counts");
    const auto schroeder = large_schroeder(cap + 1);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        const auto t = tally_chains(n);
        // n edges: S_{n-1} chains in total; upward ones are half of them for
        // n >= 2 (little Schroeder), and E is both.
        const mpz_class expected_total = schroeder[n - 1];
        const mpz_class expected_upward = n == 1 ? mpz_class(1) : mpz_class(schroeder[n - 1] / 2);
        suite.check(expected_total == t.total && expected_upward == t.upward && t.upward == t.downward, [&] {
            std::ostringstream out;
            out << "n=" << n << ": total " << t.total << " upward " << t.upward << " downward " << t.downward
                << ", expected " << expected_total << " / " << expected_upward;
            return out.str();
        });
    }
    return suite.finish();
}

SuiteResult oracle_suite(std::uint64_t cap, bool inject_fault) {
    Suite suite("oracle equality");
    for (std::uint64_t n = 1; n <= cap; ++n) {
        TriPolyEngine<mpz_class> engine;
        for_each_chain(n, [&](const Formula& f) {
            auto fast = engine.evaluate(f).upper.coeffs;
            if (inject_fault) {
                fast.back() += 1;
            }
            const auto slow = oracle_tripoly(visibility(f)).coeffs;
            suite.check(fast == slow, [&] {
                return f.to_string() + ": tri_poly " + show(fast) + " vs oracle " + show(slow);
            });
        });
    }
    return suite.finish();
}

SuiteResult visibility_suite(std::uint64_t cap) {
    Suite suite("visibility round trip");
    for (std::uint64_t n = 1; n <= cap; ++n) {
        for_each_chain(n, [&](const Formula& f) {
            const auto v = visibility(f);
            bool ok = v.well_formed() && formula_from_visibility(v) == f && v.negated() == visibility(flip(f));
            suite.check(ok, [&] { return f.to_string(); });
        });
    }
    return suite.finish();
}

SuiteResult geometry_suite(std::uint64_t cap) {
    Suite suite("geometric realization");
    for (std::uint64_t n = 1; n <= cap; ++n) {
        for_each_chain(n, [&](const Formula& f) {
            const auto points = realize(f);
            const bool oriented = realizes(points, visibility(f));
            const auto expected = counts<mpz_class>(f).total;
            const auto counted = count_triangulations_points(points);
            suite.check(oriented && counted == expected, [&] {
                std::ostringstream out;
                out << f.to_string() << ": orientation " << (oriented ? "ok" : "mismatch") << ", point count "
                    << counted << " vs " << expected;
                return out.str();
            });
        });
    }
    return suite.finish();
}

SuiteResult law_suite(std::uint64_t cap) {
    Suite suite("algebraic laws");
    std::vector<std::vector<Formula>> by_size(cap + 1);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        by_size[n] = enumerate_chains(n);
    }
    TriPolyEngine<mpz_class> engine;
    auto t = [&](const Formula& f) { return engine.evaluate(f).upper.coeffs; };
    for (std::uint64_t n = 1; n <= cap; ++n) {
        for (const auto& f : by_size[n]) {
            suite.check(flip(flip(f)) == f, [&] { return "involution: " + f.to_string(); });
        }
    }
    for (std::uint64_t na = 1; na < cap; ++na) {
        for (std::uint64_t nb = 1; na + nb <= cap; ++nb) {
            for (const auto& a : by_size[na]) {
                for (const auto& b : by_size[nb]) {
                    const auto ab_vee = vee(a, b);
                    const auto ab_wedge = wedge(a, b);
                    suite.check(flip(ab_vee) == wedge(flip(a), flip(b)),
                                [&] { return "De Morgan: " + ab_vee.to_string(); });
                    suite.check(t(ab_vee) == t(vee(b, a)) && t(ab_wedge) == t(wedge(b, a)),
                                [&] { return "commutativity of T: " + ab_vee.to_string(); });
                    const auto tv = t(ab_vee);
                    const auto tw = t(ab_wedge);
                    bool dominates = tv.size() == tw.size();
                    for (std::size_t k = 0; dominates && k < tv.size(); ++k) {
                        dominates = tv[k] >= tw[k];
                    }
                    suite.check(dominates, [&] { return "vee dominates wedge: " + ab_vee.to_string(); });
                    for (std::uint64_t nc = 1; na + nb + nc <= cap; ++nc) {
                        for (const auto& c : by_size[nc]) {
                            suite.check(vee(ab_vee, c) == vee(a, vee(b, c)) &&
                                            wedge(ab_wedge, c) == wedge(a, wedge(b, c)),
                                        [&] { return "associativity: " + vee(ab_vee, c).to_string(); });
                        }
                    }
                }
            }
        }
    }
    return suite.finish();
}

SuiteResult numeric_suite(unsigned max_s) {
    Suite suite("exact vs extended float");
    TriPolyEngine<mpz_class> exact;
    TriPolyEngine<ExtNum> approx;
    for (unsigned s = 0; s <= max_s; ++s) {
        const auto k = koch(s);
        for (bool upper : {true, false}) {
            const auto& pe = upper ? exact.evaluate(k).upper : exact.evaluate(k).lower;
            const auto& pa = upper ? approx.evaluate(k).upper : approx.evaluate(k).lower;
            for (std::size_t i = 0; i < pe.coeffs.size(); ++i) {
                const mpq_class e = pe.coeffs[i];
                const mpq_class a = pa.coeffs[i].to_mpq();
                const bool ok = sgn(e) == 0 ? sgn(a) == 0 : abs(a - e) <= e / mpq_class(mpz_class("1000000000000"));
                suite.check(ok, [&] { return "koch(" + std::to_string(s) + ") coefficient " + std::to_string(i); });
            }
        }
    }
    return suite.finish();
}

SuiteResult kernel_suite(std::uint64_t cap) {
    Suite suite("serial vs parallel kernels");
    std::mt19937_64 rng(kSeed);
    const auto pool = enumerate_chains(cap);
    const int saved_threads = omp_get_max_threads();
    for (int round = 0; round < 16; ++round) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        // Large enough for the parallel path to engage.
        const auto f = poly(vee(a, b), 16 + rng() % 48);
        const auto fast = tri_poly<mpz_class>(f, {0, Kernels::parallel});
        const auto slow = tri_poly<mpz_class>(f, {0, Kernels::serial});
        suite.check(fast.upper == slow.upper && fast.lower == slow.lower,
                    [&] { return "exact: " + f.to_string(); });
        // Floating results may differ from the serial summation order but
        // never between thread counts.
        omp_set_num_threads(1);
        const auto one = tri_poly<ExtNum>(f);
        omp_set_num_threads(4);
        const auto four = tri_poly<ExtNum>(f);
        omp_set_num_threads(saved_threads);
        suite.check(one.upper == four.upper && one.lower == four.lower,
                    [&] { return "thread count changes result: " + f.to_string(); });
    }
    return suite.finish();
}

SuiteResult phi_suite(std::uint64_t cap, int pairs) {
    Suite suite("phi multiplicativity");
    std::mt19937_64 rng(kSeed + 1);
    std::vector<Formula> pool;
    for (std::uint64_t n = 1; n < cap; ++n) {
        const auto chains = enumerate_chains(n);
        pool.insert(pool.end(), chains.begin(), chains.end());
    }
    for (int i = 0; i < pairs; ++i) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        if (a.edges() + b.edges() > cap) {
            --i;
            continue;
        }
        const std::size_t order = a.edges() + b.edges();
        const auto lhs = phi_series(vee(a, b), order);
        const auto rhs = PowerSeries::vee_factor(order) * phi_series(a, order) * phi_series(b, order);
        suite.check(lhs == rhs, [&] { return vee(a, b).to_string(); });
    }
    return suite.finish();
}

}  // namespace

std::uint64_t enumerate_cap(VerifyLevel level) { return level == VerifyLevel::quick ? 6 : 8; }

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    const std::uint64_t cap = enumerate_cap(options.level);
    std::vector<SuiteResult> results;
    results.push_back(enumeration_suite(cap));
    results.push_back(oracle_suite(cap, options.inject_fault));
    results.push_back(visibility_suite(cap));
    const std::uint64_t small_cap = options.level == VerifyLevel::quick ? kGeometricCapQuick : kGeometricCapFull;
    results.push_back(geometry_suite(std::min(cap, small_cap)));
    results.push_back(law_suite(std::min(cap, small_cap)));
    results.push_back(numeric_suite(options.level == VerifyLevel::quick ? 6 : kNumericKochLevel));
    results.push_back(kernel_suite(std::min<std::uint64_t>(cap, 6)));
    results.push_back(phi_suite(cap, options.level == VerifyLevel::quick ? 50 : 200));
    return results;
}

}  // namespace chains
