#pragma once

/* independent reference implementations used only by the tests; these
   deliberately avoid the code paths of the library they check */

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "gf5lat/gf5.hpp"

namespace oracles {

/* splitmix64, used so test data does not depend on platform RNGs */
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline gf5lat::F5Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
    gf5lat::F5Matrix m(r, c);
    for (auto& v : m.a) v = static_cast<gf5lat::F5>(rng.below(5));
    return m;
}

inline gf5lat::LinearCode random_code(Rng& rng, std::size_t n, std::size_t k) {
    for (;;) {
        gf5lat::F5Matrix g = random_matrix(rng, k, n);
        if (gf5lat::rref(g).rank == k) return gf5lat::LinearCode(g);
    }
}

/* every vector in the row span, by walking all 5^rows combinations */
inline std::set<std::vector<gf5lat::F5>> row_span(const gf5lat::F5Matrix& m) {
    std::set<std::vector<gf5lat::F5>> out;
    std::vector<gf5lat::F5> coef(m.rows, 0);
    for (;;) {
        std::vector<gf5lat::F5> w(m.cols, 0);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                w[j] = static_cast<gf5lat::F5>((w[j] + coef[i] * m.at(i, j)) % 5);
        out.insert(w);
        std::size_t i = 0;
        while (i < m.rows && coef[i] == 4) coef[i++] = 0;
        if (i == m.rows) break;
        ++coef[i];
    }
    return out;
}

/* exact determinant by fraction-free (Bareiss) elimination */
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    std::size_t n = m.size();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    if (n == 0) return 1;
    return mpz_class(sign * m[n - 1][n - 1]);
}

}  // namespace oracles
