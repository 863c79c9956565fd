#pragma once

/*
 * Quadratic transformation for Hankel determinants.
 *
 * If F = (a + bx) / (1 + cx + dx^2 + x^2 (e + fx) F) with a != 0, the
 * transformed series G has the same shape with coefficients given by
 * coeff_step, and det H_n(F) = a^n det H_{n-1}(G). Iterating from a seed
 * state yields det H_n(Q) = a_0^n a_1^{n-1} ... a_{n-1}.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "somos/coeff_state.hpp"
#include "somos/hankel.hpp"
#include "somos/rational.hpp"
#include "somos/series.hpp"

namespace somos {

/// Raised when the transformation hits a vanishing leading coefficient.
class TransformError : public std::domain_error {
public:
    TransformError(const std::string& what, std::optional<std::size_t> step)
        : std::domain_error(what), step_(step) {}

    [[nodiscard]] std::optional<std::size_t> step() const { return step_; }

private:
    std::optional<std::size_t> step_;
};

/// One transformation step. c is carried over and e is reset to -1.
inline CoeffState coeff_step(const CoeffState& s) {
    if (s.a.is_zero()) throw TransformError("transformation undefined (a = 0)", std::nullopt);
    const Rational& a = s.a;
    const Rational& b = s.b;
    const Rational& c = s.c;
    const Rational& d = s.d;
    const Rational a2 = a * a;
    const Rational a3 = a2 * a;
    const Rational b2 = b * b;

    CoeffState next;
    next.idx = s.idx + 1;
    next.a = -(a3 * s.e + a2 * d - a * c * b + b2) / a2;
    next.b = -(a3 * a * s.f + c * a3 * d - c * c * a2 * b + Rational(2) * c * a * b2 - b * a2 * d - b2 * b) / a3;
    next.c = c;
    next.d = -(Rational(-2) * a * c * b + Rational(2) * b2 + a2 * d) / a2;
    next.e = Rational(-1);
    next.f = -b / a;
    return next;
}

/// States s0, T(s0), ..., T^steps(s0).
inline std::vector<CoeffState> iterate_states(const CoeffState& s0, std::size_t steps) {
    if (s0.a.is_zero()) throw TransformError("transformation undefined (a = 0) at step 0", 0);
    std::vector<CoeffState> states;
    states.reserve(steps + 1);
    states.push_back(s0);
    for (std::size_t k = 1; k <= steps; ++k) {
        states.push_back(coeff_step(states.back()));
        if (states.back().a.is_zero()) {
            throw TransformError("transformation undefined (a = 0) at step " + std::to_string(k), k);
        }
    }
    return states;
}

/// prod_{k=0}^{n-1} a_k^{n-k}; 1 for n = 0.
inline Rational det_product(std::span<const CoeffState> states, std::size_t n) {
    if (states.size() < n) {
        throw std::invalid_argument("det_product needs " + std::to_string(n) + " states, have " +
                                    std::to_string(states.size()));
    }
    Rational result(1);
    for (std::size_t k = 0; k < n; ++k) result *= pow(states[k].a, static_cast<unsigned>(n - k));
    return result;
}

struct Lemma1Check {
    bool pass = true;
    std::size_t max_n = 0;                       ///< largest n compared
    std::optional<std::size_t> first_failure;    ///< first n where the identity broke
    Rational lhs;                                ///< det H_n(F) at the failure
    Rational rhs;                                ///< a^n det H_{n-1}(G) at the failure
};

/// Solves F and G = T(F) through x^order and compares det H_n(F) with
/// a^n det H_{n-1}(G) for every n <= (order + 2) / 2. det H_{-1} is taken as 1.
inline Lemma1Check lemma1_residual(const CoeffState& s, std::size_t order) {
    const CoeffState t = coeff_step(s);
    const Series F = solve_lemma_form(s, order);
    const Series G = solve_lemma_form(t, order);
    Lemma1Check out;
    out.max_n = (order + 2) / 2;
    for (std::size_t n = 0; n <= out.max_n; ++n) {
        const Rational lhs = det_bareiss(build_hankel(F, n));
        const Rational rhs = pow(s.a, static_cast<unsigned>(n)) * (n == 0 ? Rational(1) : det_bareiss(build_hankel(G, n - 1)));
        if (lhs != rhs) {
            out.pass = false;
            out.first_failure = n;
            out.lhs = lhs;
            out.rhs = rhs;
            break;
        }
    }
    return out;
}

}  // namespace somos
