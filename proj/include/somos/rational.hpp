#pragma once

/*
 * Exact rational scalars.
 *
 * Rational is a thin value wrapper over GMP's mpq_class. Every value is kept
 * in canonical form: positive denominator, gcd(|num|, den) = 1, zero as 0/1.
 * Text form is "p/q", or "p" when q = 1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace somos {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : q_(value) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        r.q_.canonicalize();
        return r;
    }

    /// Parses "p/q" or "p" (decimal, optional leading '-').
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("malformed rational");
            std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
            if (start == s.size()) throw std::invalid_argument("malformed rational");
            for (std::size_t i = start; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational");
            }
            std::string digits(s.front() == '+' ? s.substr(1) : s);
            return BigInt(digits, 10);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& mpq() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    [[nodiscard]] std::string str() const {
        if (is_integer()) return q_.get_num().get_str(10);
        return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
    }

    Rational operator-() const { return from_raw(-q_); }

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw std::domain_error("division by zero");
        q_ /= rhs.q_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.q_ == rhs.q_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.q_, rhs.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    // GMP arithmetic on canonical operands yields canonical results.
    static Rational from_raw(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_{0};
};

/// Canonical rational num/den; throws std::domain_error("zero denominator") for den = 0.
inline Rational rat(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

inline Rational inverse(const Rational& r) { return Rational(1) / r; }

}  // namespace somos
