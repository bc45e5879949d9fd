#include "chains/oracle.hpp"

#include <string>
#include <vector>

#include "chains/errors.hpp"

namespace chains {

ExactPoly oracle_tripoly(const VisibilityTriangle& v) {
    const std::size_t n = v.edges();
    if (n > kOracleMaxEdges) {
        throw CapExceeded("oracle_tripoly: " + std::to_string(n) + " edges exceeds cap " +
                          std::to_string(kOracleMaxEdges));
    }
    if (n == 0 || !v.well_formed()) {
        throw NotRealizable("oracle_tripoly: malformed visibility triangle");
    }
    auto usable = [&](std::size_t i, std::size_t j) { return v.at(i, j) >= 0; };

    std::vector<std::vector<mpz_class>> pockets(n + 1, std::vector<mpz_class>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        pockets[i][i + 1] = 1;
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t k = i + len;
            if (v.at(i, k) != 1) {
                continue;
            }
            mpz_class sum = 0;
            for (std::size_t j = i + 1; j < k; ++j) {
                if (usable(i, j) && usable(j, k)) {
                    sum += pockets[i][j] * pockets[j][k];
                }
            }
            pockets[i][k] = sum;
        }
    }

    // paths[b] = polynomial over visible curves from p_0 to p_b.
    std::vector<std::vector<mpz_class>> paths(n + 1, std::vector<mpz_class>(n, 0));
    paths[0][0] = 1;
    for (std::size_t b = 1; b <= n; ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            if (!usable(a, b) || sgn(pockets[a][b]) == 0) {
                continue;
            }
            const std::size_t shift = b - a - 1;
            for (std::size_t k = 0; k + shift < n; ++k) {
                if (sgn(paths[a][k]) != 0) {
                    paths[b][k + shift] += paths[a][k] * pockets[a][b];
                }
            }
        }
    }
    return ExactPoly{paths[n]};
}

}  // namespace chains
