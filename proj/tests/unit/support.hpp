#pragma once

#include "nikulin/lattice.hpp"

#include <random>

namespace testing {

using namespace nikulin;

inline std::mt19937& rng() {
    static std::mt19937 g(20240611);
    return g;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long lo = -6, long hi = 6) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
}

inline IntMatrix random_symmetric(std::size_t n, long lo = -6, long hi = 6, bool even = false) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(lo, hi);
    if (even)
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 2 * uniform(lo / 2, hi / 2);
    return m;
}

// product of a few elementary row operations and a permutation
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    for (int s = 0; s < steps; ++s) {
        std::size_t i = uniform(0, n - 1), j = uniform(0, n - 2);
        if (j >= i) ++j;
        long c = uniform(-2, 2);
        for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
        if (uniform(0, 3) == 0) u.swap_rows(i, j);
        if (uniform(0, 5) == 0)
            for (std::size_t k = 0; k < n; ++k) u(i, k) = -u(i, k);
    }
    return u;
}

inline IntMatrix congruent(const IntMatrix& g, const IntMatrix& p) {
    return p * g * p.transpose();
}

}  // namespace testing
