#pragma once

#include <cstddef>
#include <ostream>

#include "somos/rational.hpp"

namespace somos {

/// Coefficients of a series F in the form
///   F(x) = (a + b x) / (1 + c x + d x^2 + x^2 (e + f x) F(x)).
/// idx is the position of the state in an iterated transformation sequence.
struct CoeffState {
    std::size_t idx = 0;
    Rational a{1};
    Rational b{0};
    Rational c{0};
    Rational d{0};
    Rational e{0};
    Rational f{0};

    friend bool operator==(const CoeffState&, const CoeffState&) = default;

    friend std::ostream& operator<<(std::ostream& os, const CoeffState& s) {
        return os << "#" << s.idx << "(" << s.a << ", " << s.b << ", " << s.c << ", " << s.d
                  << ", " << s.e << ", " << s.f << ")";
    }
};

/// The starting state for the Somos-4 generating function Q:
/// Q(x) = (1 - x) / (1 - 2x - x^2 Q(x)).
inline CoeffState somos_seed_state() {
    return CoeffState{0, Rational(1), Rational(-1), Rational(-2), Rational(0), Rational(-1), Rational(0)};
}

}  // namespace somos
