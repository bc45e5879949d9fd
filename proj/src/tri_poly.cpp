#include "chains/tri_poly.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "chains/errors.hpp"
#include "chains/kernels.hpp"

namespace chains {

namespace {

template <class Num>
std::uint64_t default_cap();

template <>
std::uint64_t default_cap<mpz_class>() {
    return std::uint64_t{1} << 15;
}

template <>
std::uint64_t default_cap<ExtNum>() {
    return std::uint64_t{1} << 22;
}

template <class Num>
TriPolynomial<Num> combine(NodeKind kind, const TriPolynomial<Num>& lhs, const TriPolynomial<Num>& rhs,
                           Kernels kernels) {
    std::span<const Num> a(lhs.coeffs);
    std::span<const Num> b(rhs.coeffs);
    std::vector<Num> out;
    if (kind == NodeKind::vee) {
        out = kernels == Kernels::parallel ? kernels::parallel::vee_combine(a, b)
                                           : kernels::serial::vee_combine(a, b);
    } else {
        out = kernels == Kernels::parallel ? kernels::parallel::wedge_combine(a, b)
                                           : kernels::serial::wedge_combine(a, b);
    }
    return {std::move(out)};
}

}  // namespace

NumberMode default_mode(std::uint64_t edges) {
    return edges <= kExactModeDefaultEdges ? NumberMode::exact : NumberMode::extfloat;
}

std::string to_string(NumberMode mode) { return mode == NumberMode::exact ? "exact" : "float"; }

template <class Num>
TriPolynomial<Num> wedge_combine(const TriPolynomial<Num>& lhs, const TriPolynomial<Num>& rhs) {
    return combine(NodeKind::wedge, lhs, rhs, Kernels::parallel);
}

template <class Num>
TriPolynomial<Num> vee_combine(const TriPolynomial<Num>& lhs, const TriPolynomial<Num>& rhs) {
    return combine(NodeKind::vee, lhs, rhs, Kernels::parallel);
}

ExactPoly closed_form_cave_vee_cave(std::uint64_t n1, std::uint64_t n2) {
    if (n1 == 0 || n2 == 0) {
        throw std::invalid_argument("closed_form_cave_vee_cave: sizes must be positive");
    }
    ExactPoly p{std::vector<mpz_class>(n1 + n2, 0)};
    p.coeffs[0] = 1;
    mpz_class binom;
    for (std::uint64_t l = 1; l <= n1; ++l) {
        for (std::uint64_t r = 1; r <= n2; ++r) {
            mpz_bin_uiui(binom.get_mpz_t(), l + r - 2, l - 1);
            p.coeffs[l + r - 1] += binom;
        }
    }
    return p;
}

ExtPoly to_ext(const ExactPoly& p) {
    ExtPoly out;
    out.coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        out.coeffs.push_back(ExtNum::from_mpz(c));
    }
    return out;
}

template <class Num>
TriPolyEngine<Num>::TriPolyEngine(EvalOptions options) : options_(options) {
    if (options_.max_edges == 0) {
        options_.max_edges = default_cap<Num>();
    }
}

template <class Num>
PolyPair<Num> TriPolyEngine<Num>::compute(const Formula& f) const {
    if (f.is_prim()) {
        return {{{Num{1}}}, {{Num{1}}}};
    }
    // Under a Vee the upper polynomials see convex sums and the lower ones
    // (the flipped chain) concave sums; a Wedge swaps the roles.
    const NodeKind upper_op = f.kind();
    const NodeKind lower_op = f.kind() == NodeKind::vee ? NodeKind::wedge : NodeKind::vee;
    auto children = f.children();
    const auto& first = memo_.at(children[0].id())->polys;
    TriPolynomial<Num> upper = first.upper;
    TriPolynomial<Num> lower = first.lower;
    for (std::size_t i = 1; i < children.size(); ++i) {
        const auto& next = memo_.at(children[i].id())->polys;
        upper = combine(upper_op, upper, next.upper, options_.kernels);
        lower = combine(lower_op, lower, next.lower, options_.kernels);
    }
    return {std::move(upper), std::move(lower)};
}

template <class Num>
const PolyPair<Num>& TriPolyEngine<Num>::evaluate(const Formula& f) {
    if (f.edges() > options_.max_edges) {
        throw CapExceeded("tri_poly: " + std::to_string(f.edges()) + " edges exceeds cap " +
                          std::to_string(options_.max_edges));
    }
    if (auto it = memo_.find(f.id()); it != memo_.end()) {
        return it->second->polys;
    }

    // Post-order walk over the not-yet-evaluated part of the DAG, recording
    // each node's height above the memoized frontier.
    std::map<std::size_t, std::vector<Formula>> layers;
    std::unordered_map<const void*, std::size_t> height;
    std::vector<std::pair<Formula, std::size_t>> stack{{f, 0}};
    while (!stack.empty()) {
        auto& [node, next_child] = stack.back();
        auto children = node.children();
        if (next_child < children.size()) {
            const Formula child = children[next_child++];
            if (!memo_.contains(child.id()) && !height.contains(child.id())) {
                stack.emplace_back(child, 0);
            }
            continue;
        }
        std::size_t h = 0;
        for (const auto& c : children) {
            if (auto it = height.find(c.id()); it != height.end()) {
                h = std::max(h, it->second + 1);
            }
        }
        height.emplace(node.id(), h);
        layers[h].push_back(node);
        stack.pop_back();
    }

    for (auto& [h, nodes] : layers) {
        std::vector<PolyPair<Num>> results(nodes.size());
        const auto count = static_cast<long>(nodes.size());
        // Independent nodes of one layer run concurrently; a lone node gets
        // the threads inside its kernels instead.
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
        for (long i = 0; i < count; ++i) {
            results[i] = compute(nodes[i]);
        }
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            memo_.emplace(nodes[i].id(), std::make_unique<Entry>(Entry{nodes[i], std::move(results[i])}));
        }
    }
    return memo_.at(f.id())->polys;
}

template <class Num>
PolyPair<Num> tri_poly(const Formula& f, EvalOptions options) {
    TriPolyEngine<Num> engine(options);
    return engine.evaluate(f);
}

double root_of(const mpz_class& v, std::uint64_t n) { return nth_root(v, n); }
double root_of(const ExtNum& v, std::uint64_t n) { return ext_nth_root(v, n); }

template <class Num>
ChainCounts<Num> counts_of(const PolyPair<Num>& polys) {
    ChainCounts<Num> c;
    c.edges = polys.upper.edges();
    c.upper = polys.upper.leading();
    c.lower = polys.lower.leading();
    c.total = c.upper * c.lower;
    c.root_upper = root_of(c.upper, c.edges);
    c.root_lower = root_of(c.lower, c.edges);
    c.root_total = root_of(c.total, c.edges);
    return c;
}

template <class Num>
ChainCounts<Num> counts(const Formula& f, EvalOptions options) {
    return counts_of(tri_poly<Num>(f, options));
}

template class TriPolyEngine<mpz_class>;
template class TriPolyEngine<ExtNum>;

template TriPolynomial<mpz_class> wedge_combine(const TriPolynomial<mpz_class>&, const TriPolynomial<mpz_class>&);
template TriPolynomial<ExtNum> wedge_combine(const TriPolynomial<ExtNum>&, const TriPolynomial<ExtNum>&);
template TriPolynomial<mpz_class> vee_combine(const TriPolynomial<mpz_class>&, const TriPolynomial<mpz_class>&);
template TriPolynomial<ExtNum> vee_combine(const TriPolynomial<ExtNum>&, const TriPolynomial<ExtNum>&);
template PolyPair<mpz_class> tri_poly(const Formula&, EvalOptions);
template PolyPair<ExtNum> tri_poly(const Formula&, EvalOptions);
template ChainCounts<mpz_class> counts_of(const PolyPair<mpz_class>&);
template ChainCounts<ExtNum> counts_of(const PolyPair<ExtNum>&);
template ChainCounts<mpz_class> counts(const Formula&, EvalOptions);
template ChainCounts<ExtNum> counts(const Formula&, EvalOptions);

}  // namespace chains
