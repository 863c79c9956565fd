#pragma once

/*
 * Hankel matrices and exact determinants.
 *
 * Three evaluators are provided:
 *   - det_bareiss: fraction-free Bareiss elimination over integers after
 *     clearing row denominators. The primary algorithm.
 *   - det_condensation: Dodgson condensation over rationals. Falls back to
 *     cofactor expansion when an interior minor vanishes.
 *   - det_cofactor: Laplace expansion with minors memoized by column subset.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "somos/rational.hpp"
#include "somos/series.hpp"

namespace somos {

/// Dense square matrix, row-major.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw std::invalid_argument("matrix must be square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using HankelMatrix = Matrix<Rational>;

enum class DetMethod { bareiss, condensation, cofactor };

inline std::string_view to_string(DetMethod m) {
    switch (m) {
        case DetMethod::bareiss: return "bareiss";
        case DetMethod::condensation: return "condensation";
        case DetMethod::cofactor: return "cofactor";
    }
    return "unknown";
}

inline DetMethod parse_det_method(std::string_view name) {
    if (name == "bareiss") return DetMethod::bareiss;
    if (name == "condensation") return DetMethod::condensation;
    if (name == "cofactor") return DetMethod::cofactor;
    throw std::invalid_argument("unknown determinant method: " + std::string(name));
}

struct HankelResult {
    std::size_t n = 0;
    Rational det{1};
    DetMethod method = DetMethod::bareiss;

    friend bool operator==(const HankelResult&, const HankelResult&) = default;
};

/// H_n(q) with entries q_{i+j}; needs q_0..q_{2n-2}.
inline HankelMatrix build_hankel(const Series& q, std::size_t n) {
    if (n == 0) return HankelMatrix{};
    if (q.order() < 2 * n - 2) {
        throw std::invalid_argument("series order too low for H_" + std::to_string(n) + " (need order " +
                                    std::to_string(2 * n - 2) + ", have " + std::to_string(q.order()) + ")");
    }
    HankelMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = q[i + j];
    return m;
}

/// Fraction-free elimination on an integer matrix (consumed). Row swaps on
/// zero pivots; every division is exact.
inline BigInt bareiss_integer(Matrix<BigInt> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    BigInt tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return BigInt(0);
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                tmp = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Exact determinant; rows are scaled to integers first and the scale
/// product is divided out at the end.
inline Rational det_bareiss(const Matrix<Rational>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    Matrix<BigInt> ints(n);
    BigInt scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).mpq().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) ints(i, j) = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
        scale *= row_lcm;
    }
    return Rational(bareiss_integer(std::move(ints)), scale);
}

/// Largest dimension accepted by det_cofactor (memo table has 2^n entries).
inline constexpr std::size_t kCofactorMaxN = 24;

/// Laplace expansion along successive rows. D[mask] is the minor on the
/// first popcount(mask) rows and the columns in mask.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n > kCofactorMaxN) throw std::invalid_argument("cofactor expansion limited to n <= 24");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<T> minors(std::size_t{full} + 1, T(0));
    minors[0] = T(1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto rows = static_cast<std::size_t>(__builtin_popcount(mask));
        const std::size_t row = rows - 1;
        T acc(0);
        std::size_t position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t bit = std::uint32_t{1} << j;
            if ((mask & bit) == 0) continue;
            const T& sub = minors[mask ^ bit];
            if (!(m(row, j) == T(0)) && !(sub == T(0))) {
                if ((row + position) % 2 == 0) acc += m(row, j) * sub;
                else acc -= m(row, j) * sub;
            }
            ++position;
        }
        minors[mask] = std::move(acc);
    }
    return minors[full];
}

struct CondensationResult {
    Rational value{1};
    DetMethod method = DetMethod::condensation;
};

/// Dodgson condensation. When a divisor minor is zero the whole instance is
/// recomputed by cofactor expansion and tagged as such.
inline CondensationResult det_condensation_tagged(const Matrix<Rational>& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    Matrix<Rational> prev(n + 1, Rational(1));
    Matrix<Rational> cur = m;
    for (std::size_t size = n; size > 1; --size) {
        Matrix<Rational> next(size - 1);
        for (std::size_t i = 0; i + 1 < size; ++i) {
            for (std::size_t j = 0; j + 1 < size; ++j) {
                const Rational& divisor = prev(i + 1, j + 1);
                if (divisor.is_zero()) return {det_cofactor(m), DetMethod::cofactor};
                next(i, j) = (cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j)) / divisor;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur(0, 0), DetMethod::condensation};
}

inline Rational det_condensation(const Matrix<Rational>& m) { return det_condensation_tagged(m).value; }

inline HankelResult hankel_det(const HankelMatrix& h, DetMethod method) {
    switch (method) {
        case DetMethod::bareiss: return {h.size(), det_bareiss(h), DetMethod::bareiss};
        case DetMethod::condensation: {
            auto r = det_condensation_tagged(h);
            return {h.size(), std::move(r.value), r.method};
        }
        case DetMethod::cofactor: return {h.size(), det_cofactor(h), DetMethod::cofactor};
    }
    throw std::logic_error("unhandled determinant method");
}

/// s_0..s_{n_max} with s_n = det H_n(q), each H_n evaluated independently.
inline std::vector<HankelResult> det_sequence(const Series& q, std::size_t n_max,
                                              DetMethod method = DetMethod::bareiss) {
    if (n_max > 0 && q.order() < 2 * n_max - 2) {
        throw std::invalid_argument("series order too low for H_" + std::to_string(n_max) + " (need order " +
                                    std::to_string(2 * n_max - 2) + ", have " + std::to_string(q.order()) + ")");
    }
    std::vector<HankelResult> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(hankel_det(build_hankel(q, n), method));
    return out;
}

}  // namespace somos
