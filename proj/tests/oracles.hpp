#pragma once

// Test-only reference implementations, independent of the library's
// elimination and expansion code paths.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "somos/hankel.hpp"
#include "somos/rational.hpp"

namespace somos::testing {

/// Leibniz formula: sum over all permutations of signed products.
inline Rational leibniz_det(const Matrix<Rational>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Matrix<Rational> random_int_matrix(std::mt19937_64& rng, std::size_t n, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(dist(rng));
    return m;
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return rat(num(rng), den(rng));
}

}  // namespace somos::testing
