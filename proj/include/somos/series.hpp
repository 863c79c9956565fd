#pragma once

/*
 * Truncated formal power series over Rational.
 *
 * A Series stores c_0..c_N and is valid through x^N (its order). Binary
 * operations produce a result of order min(order_f, order_g); nothing is
 * ever padded with zeros past the order of an operand.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "somos/coeff_state.hpp"
#include "somos/rational.hpp"

namespace somos {

class Series {
public:
    /// coeffs[k] is the coefficient of x^k; order = coeffs.size() - 1.
    explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    static Series zero(std::size_t order) { return Series(std::vector<Rational>(order + 1)); }

    static Series constant(const Rational& value, std::size_t order) {
        Series s = zero(order);
        s.coeffs_[0] = value;
        return s;
    }

    /// An exact polynomial viewed as a series of the given order. Terms of
    /// degree above the order are dropped.
    static Series polynomial(std::initializer_list<Rational> terms, std::size_t order) {
        Series s = zero(order);
        std::size_t k = 0;
        for (const auto& t : terms) {
            if (k <= order) s.coeffs_[k] = t;
            ++k;
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    void set(std::size_t k, Rational value) { coeffs_.at(k) = std::move(value); }

    [[nodiscard]] Series truncate(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("cannot truncate above series order");
        return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    /// x^k * F. The result is valid through order + k.
    [[nodiscard]] Series shift_up(std::size_t k) const {
        std::vector<Rational> out(k);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Series(std::move(out));
    }

    /// True when both series share c_0..c_k.
    [[nodiscard]] bool agrees_through(const Series& other, std::size_t k) const {
        if (k > order() || k > other.order()) return false;
        return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k) + 1, other.coeffs_.begin());
    }

    [[nodiscard]] bool is_zero() const {
        return std::ranges::all_of(coeffs_, [](const Rational& r) { return r.is_zero(); });
    }

    friend bool operator==(const Series&, const Series&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Series& s) {
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k) os << (k ? "," : "") << s.coeffs_[k];
        return os << " + O(x^" << s.order() + 1 << ")";
    }

private:
    std::vector<Rational> coeffs_;
};

inline Series operator+(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = f[k] + g[k];
    return Series(std::move(out));
}

inline Series operator-(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = f[k] - g[k];
    return Series(std::move(out));
}

inline Series operator*(const Rational& r, const Series& f) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : out) c *= r;
    return Series(std::move(out));
}

inline Series operator*(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += f[i] * g[j];
    }
    return Series(std::move(out));
}

/// f / g; g must have a nonzero constant term.
inline Series operator/(const Series& f, const Series& g) {
    if (g[0].is_zero()) throw std::domain_error("non-invertible series");
    const std::size_t n = std::min(f.order(), g.order());
    const Rational inv_g0 = inverse(g[0]);
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = f[k];
        for (std::size_t i = 1; i <= k; ++i) acc -= g[i] * out[k - i];
        out[k] = acc * inv_g0;
    }
    return Series(std::move(out));
}

inline Series ps_add(const Series& f, const Series& g) { return f + g; }
inline Series ps_mul(const Series& f, const Series& g) { return f * g; }
inline Series ps_div(const Series& f, const Series& g) { return f / g; }

/// y(z) with y = z + O(z^2) and y - y^2 = z - z^3, through z^order.
///
/// Comparing z^k coefficients for k >= 2 gives
///   y_k = [k == 3] * (-1) + sum_{i=1}^{k-1} y_i y_{k-i},
/// which only involves lower-order coefficients.
inline Series solve_fundamental(std::size_t order) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    std::vector<Rational> y(order + 1);
    y[1] = Rational(1);
    for (std::size_t k = 2; k <= order; ++k) {
        Rational acc = (k == 3) ? Rational(-1) : Rational(0);
        for (std::size_t i = 1; i < k; ++i) acc += y[i] * y[k - i];
        y[k] = std::move(acc);
    }
    return Series(std::move(y));
}

/// Q(z) = (y - z) / z^2, so Q_k = y_{k+2}.
inline Series q_from_y(const Series& y) {
    if (y.order() < 2) throw std::invalid_argument("series order too low to divide by z^2");
    if (!y[0].is_zero() || y[1] != Rational(1)) throw std::invalid_argument("not divisible by z^2");
    return Series(std::vector<Rational>(y.coeffs().begin() + 2, y.coeffs().end()));
}

/// Catalan generating function C = 1 + x C^2, through x^order.
inline Series solve_catalan(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = Rational(1);
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc;
        for (std::size_t i = 0; i < k; ++i) acc += c[i] * c[k - 1 - i];
        c[k] = std::move(acc);
    }
    return Series(std::move(c));
}

/// Right-hand side (a + bx) / (1 + cx + dx^2 + x^2 (e + fx) F) truncated at `order`.
inline Series lemma_form_rhs(const CoeffState& s, const Series& F, std::size_t order) {
    const Series numer = Series::polynomial({s.a, s.b}, order);
    const Series base = Series::polynomial({Rational(1), s.c, s.d}, order);
    const Series tail = (Series::polynomial({s.e, s.f}, order) * F.truncate(order)).shift_up(2).truncate(order);
    return numer / (base + tail);
}

/// The unique power series F = (a + bx) / (1 + cx + dx^2 + x^2 (e + fx) F)
/// through x^order, by fixed-point iteration from the constant series a.
///
/// Each pass fixes at least two more coefficients, so the iteration settles
/// well inside the cap of order + 3 passes.
inline Series solve_lemma_form(const CoeffState& s, std::size_t order) {
    Series current = Series::constant(s.a, order);
    const std::size_t cap = order + 3;
    for (std::size_t pass = 0; pass < cap; ++pass) {
        Series next = lemma_form_rhs(s, current, order);
        if (next == current) return current;
        current = std::move(next);
    }
    throw std::logic_error("lemma-form fixed point did not converge");
}

/// F * (1 + cx + dx^2 + x^2 (e + fx) F) - (a + bx), truncated at F's order.
/// Zero exactly when F solves the lemma-form equation through that order.
inline Series lemma_form_residual(const CoeffState& s, const Series& F) {
    const std::size_t n = F.order();
    const Series base = Series::polynomial({Rational(1), s.c, s.d}, n);
    const Series tail = (Series::polynomial({s.e, s.f}, n) * F).shift_up(2).truncate(n);
    return F * (base + tail) - Series::polynomial({s.a, s.b}, n);
}

}  // namespace somos
