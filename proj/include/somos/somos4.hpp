#pragma once

/*
 * The Somos-4 recurrence and the a-sequence identities it reduces to.
 *
 * With s_n = a_0^n a_1^{n-1} ... a_{n-1}, the recurrence
 *   s_n s_{n-4} = s_{n-1} s_{n-3} + s_{n-2}^2
 * becomes a_n a_{n-1} a_{n-2} = 1 + 1/a_{n-1}.
 */

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "somos/coeff_state.hpp"
#include "somos/rational.hpp"

namespace somos {

/// The four most recent terms s_{index-3}..s_index.
struct SomosWindow {
    std::array<Rational, 4> terms{Rational(1), Rational(1), Rational(2), Rational(3)};
    std::size_t index = 3;

    [[nodiscard]] const Rational& newest() const { return terms[3]; }
    friend bool operator==(const SomosWindow&, const SomosWindow&) = default;
};

/// s_{n+1} = (s_n s_{n-2} + s_{n-1}^2) / s_{n-3}.
inline SomosWindow somos4_extend(const SomosWindow& w) {
    const auto& t = w.terms;
    if (t[0].is_zero()) throw std::domain_error("Somos recurrence undefined");
    const Rational next = (t[3] * t[1] + t[2] * t[2]) / t[0];
    return SomosWindow{{t[1], t[2], t[3], next}, w.index + 1};
}

/// s_0..s_count from the given initial window (1, 1, 2, 3 by default).
inline std::vector<Rational> somos_sequence(std::size_t count, const SomosWindow& start = SomosWindow{}) {
    std::vector<Rational> out(start.terms.begin(), start.terms.end());
    if (count < 4) {
        out.resize(count + 1);
        return out;
    }
    SomosWindow w = start;
    while (out.size() <= count) {
        w = somos4_extend(w);
        out.push_back(w.newest());
    }
    return out;
}

/// a_0..a_K with the companion f_0..f_K taken from the same states.
struct ASequence {
    std::vector<Rational> a;
    std::vector<Rational> f;
};

inline ASequence a_sequence(std::span<const CoeffState> states) {
    ASequence out;
    for (const auto& s : states) {
        if (s.a.is_zero()) throw std::domain_error("a-sequence term vanishes at index " + std::to_string(s.idx));
        out.a.push_back(s.a);
        out.f.push_back(s.f);
    }
    return out;
}

/// a_n a_{n-1} a_{n-2} == 1 + 1/a_{n-1}.
inline bool check_rec_a(std::span<const Rational> a, std::size_t n) {
    if (n < 2 || n >= a.size()) throw std::out_of_range("check_rec_a index out of range");
    if (a[n - 1].is_zero()) return false;
    return a[n] * a[n - 1] * a[n - 2] == Rational(1) + inverse(a[n - 1]);
}

/// a_{n+2} = 4/a_{n+1} - a_n - 1/a_{n+1}^2.
inline Rational an2_step(const Rational& a_n, const Rational& a_next) {
    if (a_next.is_zero()) throw std::domain_error("an2_step undefined (a_{n+1} = 0)");
    const Rational inv = inverse(a_next);
    return Rational(4) * inv - a_n - inv * inv;
}

/// a_0..a_count generated by an2_step from (a_0, a_1).
inline std::vector<Rational> an2_sequence(const Rational& a0, const Rational& a1, std::size_t count) {
    std::vector<Rational> out{a0, a1};
    while (out.size() <= count) out.push_back(an2_step(out[out.size() - 2], out.back()));
    out.resize(count + 1);
    return out;
}

struct Theorem2Params {
    Rational a0;
    Rational a1;
    Rational f0;
    Rational f1;
    Rational c;
};

/// 2 a0 a1 + a0 (f0 + f1 + c)(2 f1 + c) - (a0 (f0 + f1 + c))^2 / a_{n+1},
/// which equals a_{n+2} a_{n+1} + a_{n+1} a_n whenever e_n = -1 throughout.
inline Rational theorem2_rhs(const Theorem2Params& p, const Rational& a_next) {
    if (a_next.is_zero()) throw std::domain_error("theorem2_rhs undefined (a_{n+1} = 0)");
    const Rational k = p.a0 * (p.f0 + p.f1 + p.c);
    return Rational(2) * p.a0 * p.a1 + k * (Rational(2) * p.f1 + p.c) - k * k / a_next;
}

/// T(n) = 4 a_{n-2} a_{n-1} - a_{n-2} - a_{n-2}^2 a_{n-1}^2 - 1 - a_{n-1}.
inline Rational t_value(const Rational& a_m2, const Rational& a_m1) {
    const Rational prod = a_m2 * a_m1;
    return Rational(4) * prod - a_m2 - prod * prod - Rational(1) - a_m1;
}

}  // namespace somos
