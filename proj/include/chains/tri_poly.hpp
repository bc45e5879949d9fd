#pragma once

// Upper triangulation polynomials of chains.
//
// T_C(x) = sum_k t_k(C) x^k counts partial upper triangulations of C by
// number of triangles. The engine evaluates T_F and T_flip(F) jointly,
// bottom-up over the formula: a Vee node combines its summands' T with
// vee_combine and their T_flip with wedge_combine, and a Wedge node the other
// way round. Hash-consed subformulas are evaluated once, so a Koch chain
// K_s costs one vee_combine and one wedge_combine per level.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "chains/extnum.hpp"
#include "chains/formula.hpp"

namespace chains {

enum class NumberMode { exact, extfloat };

// Exact mode is the default up to this many edges.
inline constexpr std::uint64_t kExactModeDefaultEdges = 512;

NumberMode default_mode(std::uint64_t edges);
std::string to_string(NumberMode mode);

template <class Num>
struct TriPolynomial {
    std::vector<Num> coeffs;  // t_0 .. t_{n-1}

    std::uint64_t edges() const noexcept { return coeffs.size(); }
    // Highest nonzero coefficient, which counts full upper triangulations.
    // A chain whose upper hull has h edges has its top term at x^{n-h}.
    const Num& leading() const {
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            if (!(*it == Num{0})) {
                return *it;
            }
        }
        return coeffs.front();
    }

    friend bool operator==(const TriPolynomial&, const TriPolynomial&) = default;
};

using ExactPoly = TriPolynomial<mpz_class>;
using ExtPoly = TriPolynomial<ExtNum>;

// T_F together with T_flip(F), the lower triangulation polynomial of F.
template <class Num>
struct PolyPair {
    TriPolynomial<Num> upper;
    TriPolynomial<Num> lower;
};

template <class Num>
TriPolynomial<Num> wedge_combine(const TriPolynomial<Num>& lhs, const TriPolynomial<Num>& rhs);

template <class Num>
TriPolynomial<Num> vee_combine(const TriPolynomial<Num>& lhs, const TriPolynomial<Num>& rhs);

// T of cave(n1) v cave(n2): 1 + sum_{l<=n1, r<=n2} C(l+r-2, l-1) x^{l+r-1}.
ExactPoly closed_form_cave_vee_cave(std::uint64_t n1, std::uint64_t n2);

ExtPoly to_ext(const ExactPoly& p);

enum class Kernels { parallel, serial };

struct EvalOptions {
    // 0 selects the per-type default (2^15 exact, 2^22 ExtNum).
    std::uint64_t max_edges = 0;
    Kernels kernels = Kernels::parallel;
};

template <class Num>
class TriPolyEngine {
public:
    explicit TriPolyEngine(EvalOptions options = {});

    // Throws CapExceeded above the edge cap. The reference stays valid for
    // the engine's lifetime.
    const PolyPair<Num>& evaluate(const Formula& f);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    struct Entry {
        Formula formula;  // keeps the node, and so the key, alive
        PolyPair<Num> polys;
    };

    PolyPair<Num> compute(const Formula& f) const;

    EvalOptions options_;
    std::unordered_map<const void*, std::unique_ptr<Entry>> memo_;
};

template <class Num>
PolyPair<Num> tri_poly(const Formula& f, EvalOptions options = {});

template <class Num>
struct ChainCounts {
    std::uint64_t edges = 0;
    Num upper{0};
    Num lower{0};
    Num total{0};
    double root_upper = 0;
    double root_lower = 0;
    double root_total = 0;
};

template <class Num>
ChainCounts<Num> counts_of(const PolyPair<Num>& polys);

template <class Num>
ChainCounts<Num> counts(const Formula& f, EvalOptions options = {});

double root_of(const mpz_class& v, std::uint64_t n);
double root_of(const ExtNum& v, std::uint64_t n);

extern template class TriPolyEngine<mpz_class>;
extern template class TriPolyEngine<ExtNum>;

}  // namespace chains
