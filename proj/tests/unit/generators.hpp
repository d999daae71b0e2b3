#pragma once

// Hand-rolled random generators shared by the property tests. Seeds are
// fixed so failures reproduce.

#include <algorithm>
#include <random>

#include "octic/binary_forms.hpp"
#include "octic/matrix.hpp"
#include "octic/perm.hpp"

namespace octic::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }

/// Random element of SL_n(Z) as a product of elementary moves.
inline IMat random_unimodular(std::size_t n, int moves, i64 step = 2) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    if (n < 2) return m;
    for (int k = 0; k < moves; ++k) {
        std::size_t i = uniform(0, n - 1), j = uniform(0, n - 2);
        if (j >= i) ++j;
        i64 c = uniform(-step, step);
        for (std::size_t col = 0; col < n; ++col) m(i, col) += c * m(j, col);
    }
    return m;
}

inline IMat congruent(const IMat& g, const IMat& m) {
    const std::size_t n = g.rows();
    IMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            i64 s = 0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) s += m(i, k) * g(k, l) * m(j, l);
            out(i, j) = s;
        }
    return out;
}

/// Negative definite even Gram matrix of rank n: a root lattice A_n, D_n or
/// E_n in a scrambled basis, possibly scaled.
inline IMat random_definite_even(std::size_t n) {
    IMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
    for (std::size_t i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
    int kind = uniform(0, 2);
    if (kind == 1 && n >= 4) {  // D_n: move the last edge to the branch node
        g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
        g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
    }
    if (uniform(0, 3) == 0)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) *= 2;
    return congruent(g, random_unimodular(n, 3 * static_cast<int>(n), 1));
}

inline BinaryForm random_definite_form(i64 bound) {
    while (true) {
        BinaryForm f{uniform(1, bound), uniform(-bound, bound), uniform(1, bound)};
        if (f.det() > 0) return f;
    }
}

inline Perm random_perm(std::size_t n) {
    Perm p = perm_identity(n);
    std::shuffle(p.begin(), p.end(), rng());
    return p;
}

}  // namespace octic::testing
