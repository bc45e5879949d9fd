#include "chains/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>
#include <omp.h>

#include "chains/extnum.hpp"

namespace chains::kernels {

namespace {

// Below this many DP cells the parallel kernels run on one thread.
constexpr std::size_t kParallelCells = std::size_t{1} << 14;

inline void add_product(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline void add_product(ExtNum& acc, const ExtNum& a, const ExtNum& b) { acc = acc + a * b; }

template <class Num>
void check_inputs(std::span<const Num> lhs, std::span<const Num> rhs) {
    if (lhs.empty() || rhs.empty()) {
        throw std::invalid_argument("kernels: triangulation polynomials have at least one coefficient");
    }
}

}  // namespace

namespace serial {

template <class Num>
std::vector<Num> wedge_combine(std::span<const Num> lhs, std::span<const Num> rhs) {
    check_inputs(lhs, rhs);
    std::vector<Num> out(lhs.size() + rhs.size(), Num{0});
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            add_product(out[i + j], lhs[i], rhs[j]);
        }
    }
    return out;
}

template <class Num>
std::vector<Num> vee_combine(std::span<const Num> lhs, std::span<const Num> rhs) {
    auto out = wedge_combine(lhs, rhs);
    const std::size_t n1 = lhs.size();
    const std::size_t n2 = rhs.size();
    // below[r] = DP[l+1][r]; row[r] = DP[l][r]; index n2 is the zero border.
    std::vector<Num> below(n2 + 1, Num{0});
    std::vector<Num> row(n2 + 1, Num{0});
    for (std::size_t l = n1; l-- > 0;) {
        const Num& a = lhs[n1 - l - 1];
        for (std::size_t r = n2; r-- > 0;) {
            Num cell = below[r] + row[r + 1];
            add_product(cell, a, rhs[n2 - r - 1]);
            row[r] = cell;
            out[n1 + n2 - l - r - 1] += cell;
        }
        std::swap(below, row);
    }
    return out;
}

}  // namespace serial

namespace parallel {

template <class Num>
std::vector<Num> wedge_combine(std::span<const Num> lhs, std::span<const Num> rhs) {
    check_inputs(lhs, rhs);
    const auto n1 = static_cast<long>(lhs.size());
    const auto n2 = static_cast<long>(rhs.size());
    std::vector<Num> out(lhs.size() + rhs.size(), Num{0});
    const bool big = lhs.size() * rhs.size() >= kParallelCells && omp_in_parallel() == 0;
#pragma omp parallel for schedule(dynamic, 64) if (big)
    for (long k = 0; k < n1 + n2 - 1; ++k) {
        Num acc{0};
        const long lo = std::max(0L, k - n2 + 1);
        const long hi = std::min(k, n1 - 1);
        for (long i = lo; i <= hi; ++i) {
            add_product(acc, lhs[i], rhs[k - i]);
        }
        out[k] = std::move(acc);
    }
    return out;
}

template <class Num>
std::vector<Num> vee_combine(std::span<const Num> lhs, std::span<const Num> rhs) {
    auto out = parallel::wedge_combine(lhs, rhs);
    const auto n1 = static_cast<long>(lhs.size());
    const auto n2 = static_cast<long>(rhs.size());
    const auto block = static_cast<long>(kReductionBlock);

    // Diagonal buffers indexed by l.
    std::vector<Num> buf_a(lhs.size() + 1, Num{0});
    std::vector<Num> buf_b(lhs.size() + 1, Num{0});
    Num* prev = buf_a.data();
    Num* cur = buf_b.data();
    std::vector<Num> partial((lhs.size() + kReductionBlock - 1) / kReductionBlock + 1, Num{0});
    const bool big = lhs.size() * rhs.size() >= kParallelCells && omp_in_parallel() == 0;

#pragma omp parallel if (big)
    for (long d = n1 + n2 - 2; d >= 0; --d) {
        const long lmin = std::max(0L, d - (n2 - 1));
        const long lmax = std::min(n1 - 1, d);
        const long blocks = (lmax - lmin) / block + 1;

#pragma omp for schedule(static)
        for (long b = 0; b < blocks; ++b) {
            const long first = lmin + b * block;
            const long last = std::min(lmax, first + block - 1);
            Num sum{0};
            for (long l = first; l <= last; ++l) {
                const long r = d - l;
                Num cell{0};
                if (l + 1 < n1) {
                    cell += prev[l + 1];
                }
                if (r + 1 < n2) {
                    cell += prev[l];
                }
                add_product(cell, lhs[n1 - l - 1], rhs[n2 - r - 1]);
                sum += cell;
                cur[l] = std::move(cell);
            }
            partial[b] = std::move(sum);
        }

#pragma omp single
        {
            Num total = partial[0];
            for (long b = 1; b < blocks; ++b) {
                total += partial[b];
            }
            out[n1 + n2 - 1 - d] += total;
            std::swap(prev, cur);
        }
    }
    return out;
}

}  // namespace parallel

template std::vector<mpz_class> serial::wedge_combine(std::span<const mpz_class>, std::span<const mpz_class>);
template std::vector<mpz_class> serial::vee_combine(std::span<const mpz_class>, std::span<const mpz_class>);
template std::vector<ExtNum> serial::wedge_combine(std::span<const ExtNum>, std::span<const ExtNum>);
template std::vector<ExtNum> serial::vee_combine(std::span<const ExtNum>, std::span<const ExtNum>);
template std::vector<mpz_class> parallel::wedge_combine(std::span<const mpz_class>, std::span<const mpz_class>);
template std::vector<mpz_class> parallel::vee_combine(std::span<const mpz_class>, std::span<const mpz_class>);
template std::vector<ExtNum> parallel::wedge_combine(std::span<const ExtNum>, std::span<const ExtNum>);
template std::vector<ExtNum> parallel::vee_combine(std::span<const ExtNum>, std::span<const ExtNum>);

}  // namespace chains::kernels
