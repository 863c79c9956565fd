#pragma once

/*
 * End-to-end cross-validation of the Somos-4 Hankel determinants.
 *
 * Three routes to s_n are computed independently:
 *   determinant  det H_n(Q), Q expanded from y - y^2 = z - z^3
 *   product      a_0^n ... a_{n-1} over the iterated coefficient states
 *   recurrence   Somos-4 from 1, 1, 2, 3
 * and every identity suite is run with an explicit seed. Internal errors are
 * recorded in the report instead of propagating.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "somos/coeff_state.hpp"
#include "somos/hankel.hpp"
#include "somos/rational.hpp"
#include "somos/series.hpp"
#include "somos/somos4.hpp"
#include "somos/sulanke_xin.hpp"

namespace somos {

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::optional<std::string> first_failure;

    [[nodiscard]] bool passed() const { return !first_failure.has_value() && passes == trials; }

    void record(bool ok, const std::string& detail) {
        ++trials;
        if (ok) ++passes;
        else if (!first_failure) first_failure = detail;
    }
};

struct VerifyReport {
    std::string kind;  ///< "somos" or "catalan"
    std::size_t n_max = 0;
    std::size_t determinant_cap = 0;
    std::uint64_t seed = 0;
    std::vector<Rational> series;  ///< coefficients fed to the determinant route
    std::vector<std::optional<Rational>> route_determinant;  ///< nullopt past the cap
    std::vector<Rational> route_product;
    std::vector<Rational> route_recurrence;
    std::vector<SuiteResult> suites;
    std::vector<std::string> errors;
    bool overall = false;
    std::optional<std::string> first_failure;  ///< first error or failing suite detail
    std::vector<std::pair<std::string, double>> timing_ms;

    [[nodiscard]] const SuiteResult* suite(const std::string& name) const {
        for (const auto& s : suites)
            if (s.name == name) return &s;
        return nullptr;
    }
};

struct VerifyOptions {
    std::size_t n_max = 20;
    std::uint64_t seed = 0;
    std::size_t determinant_cap = 20;

    std::size_t lemma1_trials = 100;
    std::size_t lemma1_max_n = 7;
    std::size_t theorem2_trials = 200;
    std::size_t theorem2_max_n = 15;
    std::size_t oracle_trials = 200;
    std::size_t oracle_max_dim = 6;
    std::size_t closed_form_n = 30;
    std::size_t t_value_n = 50;
    std::size_t catalan_n = 15;
    std::size_t integrality_n = 34;

    /// Fault injection: add 1 to q_k before the determinant route.
    std::optional<std::size_t> corrupt_q;
};

namespace detail {

inline constexpr std::size_t kRejectionCap = 50;

// Per-suite streams so suites stay reproducible in isolation.
inline std::mt19937_64 suite_rng(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// p/q with |p| <= 5, 1 <= q <= 5.
inline Rational small_rational(std::mt19937_64& rng) { return rat(uniform(rng, -5, 5), uniform(rng, 1, 5)); }

class Stopwatch {
public:
    [[nodiscard]] double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string describe(std::size_t n, const Rational& got, const Rational& want) {
    std::ostringstream os;
    os << "n=" << n << ": " << got << " != " << want;
    return os.str();
}

// Runs body into a fresh suite; an escaping exception fails the suite.
inline void run_suite(VerifyReport& report, Stopwatch& clock, const std::string& name,
                      const std::function<void(SuiteResult&)>& body) {
    SuiteResult suite{name};
    try {
        body(suite);
    } catch (const std::exception& ex) {
        suite.record(false, std::string("exception: ") + ex.what());
    }
    report.suites.push_back(std::move(suite));
    report.timing_ms.emplace_back(name, clock.lap_ms());
}

}  // namespace detail

/// Random CoeffState with integer entries in [-5, 5] and a != 0.
inline CoeffState random_integer_state(std::mt19937_64& rng) {
    CoeffState s;
    do {
        s.a = Rational(detail::uniform(rng, -5, 5));
    } while (s.a.is_zero());
    s.b = Rational(detail::uniform(rng, -5, 5));
    s.c = Rational(detail::uniform(rng, -5, 5));
    s.d = Rational(detail::uniform(rng, -5, 5));
    s.e = Rational(detail::uniform(rng, -5, 5));
    s.f = Rational(detail::uniform(rng, -5, 5));
    return s;
}

/// A trajectory of `steps` transformation steps from a random rational state
/// with e_0 = -1, redrawing (up to 50 times) whenever some a_k vanishes.
inline std::optional<std::vector<CoeffState>> random_admissible_trajectory(std::mt19937_64& rng, std::size_t steps) {
    for (std::size_t attempt = 0; attempt < detail::kRejectionCap; ++attempt) {
        CoeffState s0;
        s0.a = detail::small_rational(rng);
        s0.b = detail::small_rational(rng);
        s0.c = detail::small_rational(rng);
        s0.d = detail::small_rational(rng);
        s0.e = Rational(-1);
        s0.f = detail::small_rational(rng);
        if (s0.a.is_zero()) continue;
        try {
            return iterate_states(s0, steps);
        } catch (const TransformError&) {
        }
    }
    return std::nullopt;
}

/// Lemma-1 identity on `trials` random integer states, n <= max_n.
inline void lemma1_suite(SuiteResult& suite, std::mt19937_64& rng, std::size_t trials, std::size_t max_n) {
    const std::size_t order = max_n == 0 ? 0 : 2 * max_n - 2;
    for (std::size_t t = 0; t < trials; ++t) {
        const CoeffState s = random_integer_state(rng);
        const Lemma1Check check = lemma1_residual(s, order);
        std::ostringstream os;
        if (!check.pass) os << "state " << s << " n=" << *check.first_failure << ": " << check.lhs << " != " << check.rhs;
        suite.record(check.pass, os.str());
    }
}

/// The Theorem-2 invariant together with the proof-intermediate identities,
/// along random admissible trajectories, for 0 <= n <= max_n.
inline void theorem2_suites(SuiteResult& invariant, SuiteResult& intermediates, std::mt19937_64& rng,
                            std::size_t trials, std::size_t max_n) {
    for (std::size_t t = 0; t < trials; ++t) {
        const auto traj = random_admissible_trajectory(rng, max_n + 2);
        if (!traj) {
            invariant.record(false, "trial " + std::to_string(t) + ": no admissible instance within rejection cap");
            intermediates.record(false, "trial " + std::to_string(t) + ": no admissible instance within rejection cap");
            continue;
        }
        const auto& st = *traj;
        const Rational& c = st[0].c;
        const Theorem2Params params{st[0].a, st[1].a, st[0].f, st[1].f, c};
        const Rational k0 = st[0].a * (st[1].f + st[0].f + c);

        std::optional<std::string> bad_invariant;
        std::optional<std::string> bad_intermediate;
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto& s0 = st[n];
            const auto& s1 = st[n + 1];
            const auto& s2 = st[n + 2];
            const Rational lhs = s2.a * s1.a + s1.a * s0.a;
            const Rational rhs = theorem2_rhs(params, s1.a);
            if (lhs != rhs && !bad_invariant) bad_invariant = "trial " + std::to_string(t) + " " + detail::describe(n, lhs, rhs);

            const auto fail = [&](const char* which) {
                if (!bad_intermediate) bad_intermediate = "trial " + std::to_string(t) + " n=" + std::to_string(n) + ": " + which;
            };
            if (s0.d != s0.a - s1.a - c * s1.f - s1.f * s1.f) fail("d_n = a_n - a_{n+1} - c f_{n+1} - f_{n+1}^2");
            if (s1.a * (s2.f + s1.f + c) != k0) fail("a_{n+1}(f_{n+2} + f_{n+1} + c) = a_0(f_1 + f_0 + c)");
            if (st[0].a * st[1].a - s1.a * s2.a != k0 * (s2.f - st[1].f)) fail("a_0 a_1 - a_{n+1} a_{n+2} = a_0(f_1 + f_0 + c)(f_{n+2} - f_1)");
            if (s0.b != -s0.a * s1.f) fail("b_n = -a_n f_{n+1}");
        }
        invariant.record(!bad_invariant, bad_invariant.value_or(""));
        intermediates.record(!bad_intermediate, bad_intermediate.value_or(""));
    }
}

/// Bareiss, condensation (with fallback) and cofactor expansion on random
/// integer matrices of dimension 0..max_dim with entries in [-9, 9].
inline void determinant_oracle_suite(SuiteResult& suite, std::mt19937_64& rng, std::size_t trials, std::size_t max_dim) {
    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<long>(max_dim)));
        Matrix<Rational> m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(detail::uniform(rng, -9, 9));
        const Rational b = det_bareiss(m);
        const Rational d = det_condensation(m);
        const Rational c = det_cofactor(m);
        std::ostringstream os;
        if (b != c || d != c) os << "trial " << t << " (" << n << "x" << n << "): bareiss " << b << ", condensation " << d << ", cofactor " << c;
        suite.record(b == c && d == c, os.str());
    }
}

/// det H_n(C) = 1 for the Catalan series, n <= n_max.
inline std::vector<Rational> catalan_determinants(std::size_t n_max, SuiteResult& suite) {
    const Series cat = solve_catalan(n_max == 0 ? 0 : 2 * n_max - 2);
    std::vector<Rational> dets;
    for (const auto& r : det_sequence(cat, n_max)) {
        suite.record(r.det == Rational(1), detail::describe(r.n, r.det, Rational(1)));
        dets.push_back(r.det);
    }
    return dets;
}

inline void finalize(VerifyReport& report) {
    bool ok = report.errors.empty();
    if (!report.errors.empty()) report.first_failure = report.errors.front();
    for (const auto& s : report.suites) {
        if (!s.passed() && !report.first_failure) report.first_failure = s.name + ": " + s.first_failure.value_or("incomplete");
        ok = ok && s.passed();
    }
    const std::size_t len = std::max({report.route_determinant.size(), report.route_product.size(), report.route_recurrence.size()});
    for (std::size_t n = 0; n < len && ok; ++n) {
        std::optional<Rational> ref;
        auto check = [&](const std::optional<Rational>& v) {
            if (!v) return;
            if (!ref) ref = v;
            else if (*ref != *v) {
                if (ok && !report.first_failure) report.first_failure = "routes disagree at n=" + std::to_string(n);
                ok = false;
            }
        };
        if (n < report.route_determinant.size()) check(report.route_determinant[n]);
        if (n < report.route_product.size()) check(report.route_product[n]);
        if (n < report.route_recurrence.size()) check(report.route_recurrence[n]);
    }
    report.overall = ok;
}

/// Full Somos-4 verification through n_max (>= 3) with the given options.
inline VerifyReport run_somos_verification(const VerifyOptions& opt) {
    if (opt.n_max < 3) throw std::invalid_argument("n_max must be at least 3");
    VerifyReport report;
    report.kind = "somos";
    report.n_max = opt.n_max;
    report.seed = opt.seed;
    report.determinant_cap = std::min(opt.n_max, opt.determinant_cap);
    const std::size_t cap = report.determinant_cap;
    detail::Stopwatch clock;

    // Routes.
    try {
        report.route_recurrence = somos_sequence(opt.n_max);
    } catch (const std::exception& ex) {
        report.errors.push_back(std::string("recurrence route: ") + ex.what());
    }
    report.timing_ms.emplace_back("route_recurrence", clock.lap_ms());

    std::vector<CoeffState> states;
    try {
        states = iterate_states(somos_seed_state(), opt.n_max);
        for (std::size_t n = 0; n <= opt.n_max; ++n) report.route_product.push_back(det_product(states, n));
    } catch (const std::exception& ex) {
        report.errors.push_back(std::string("product route: ") + ex.what());
    }
    report.timing_ms.emplace_back("route_product", clock.lap_ms());

    std::optional<Series> q;
    try {
        const std::size_t q_order = 2 * cap - 2 + 2;
        q = q_from_y(solve_fundamental(q_order + 2));
        if (opt.corrupt_q && *opt.corrupt_q <= q->order()) q->set(*opt.corrupt_q, (*q)[*opt.corrupt_q] + Rational(1));
        report.series.assign(q->coeffs().begin(), q->coeffs().end());
        for (const auto& r : det_sequence(*q, cap)) report.route_determinant.emplace_back(r.det);
        report.route_determinant.resize(opt.n_max + 1);
    } catch (const std::exception& ex) {
        report.errors.push_back(std::string("determinant route: ") + ex.what());
    }
    report.timing_ms.emplace_back("route_determinant", clock.lap_ms());

    detail::run_suite(report, clock, "route_agreement", [&](SuiteResult& suite) {
        for (std::size_t n = 0; n <= opt.n_max; ++n) {
            const bool have_rec = n < report.route_recurrence.size();
            const bool have_prod = n < report.route_product.size();
            if (!have_rec || !have_prod) {
                suite.record(false, "n=" + std::to_string(n) + ": route missing");
                continue;
            }
            const Rational& rec = report.route_recurrence[n];
            if (report.route_product[n] != rec) {
                suite.record(false, "route product disagrees with recurrence at " + detail::describe(n, report.route_product[n], rec));
                continue;
            }
            if (n <= cap) {
                const auto& det = n < report.route_determinant.size() ? report.route_determinant[n] : std::nullopt;
                if (!det) {
                    suite.record(false, "n=" + std::to_string(n) + ": determinant route missing");
                    continue;
                }
                if (*det != rec) {
                    suite.record(false, "route determinant disagrees with recurrence at " + detail::describe(n, *det, rec));
                    continue;
                }
            }
            suite.record(true, "");
        }
    });

    detail::run_suite(report, clock, "lemma_form_fixture", [&](SuiteResult& suite) {
        if (!q) throw std::runtime_error("Q unavailable");
        const Series fixed = solve_lemma_form(somos_seed_state(), q->order());
        for (std::size_t k = 0; k <= q->order(); ++k) {
            suite.record(fixed[k] == (*q)[k], "q_" + std::to_string(k) + ": lemma form gives " + fixed[k].str() + ", expansion gives " + (*q)[k].str());
        }
    });

    detail::run_suite(report, clock, "recurrence_integrality", [&](SuiteResult& suite) {
        const auto seq = somos_sequence(std::max(opt.integrality_n, opt.n_max));
        for (std::size_t n = 0; n < seq.size(); ++n) suite.record(seq[n].is_integer(), "s_" + std::to_string(n) + " = " + seq[n].str());
    });

    detail::run_suite(report, clock, "rec_a", [&](SuiteResult& suite) {
        const auto seq = a_sequence(states);
        for (std::size_t n = 2; n < seq.a.size(); ++n) suite.record(check_rec_a(seq.a, n), "n=" + std::to_string(n));
    });

    detail::run_suite(report, clock, "closed_form", [&](SuiteResult& suite) {
        const auto traj = iterate_states(somos_seed_state(), opt.closed_form_n);
        const auto closed = an2_sequence(traj[0].a, traj[1].a, opt.closed_form_n);
        for (std::size_t n = 0; n <= opt.closed_form_n; ++n) suite.record(closed[n] == traj[n].a, detail::describe(n, closed[n], traj[n].a));
    });

    detail::run_suite(report, clock, "t_value_zero", [&](SuiteResult& suite) {
        const auto a = an2_sequence(Rational(1), Rational(2), opt.t_value_n);
        for (std::size_t n = 2; n <= opt.t_value_n; ++n) {
            const Rational t = t_value(a[n - 2], a[n - 1]);
            suite.record(t.is_zero(), detail::describe(n, t, Rational(0)));
        }
    });

    detail::run_suite(report, clock, "lemma1_identity", [&](SuiteResult& suite) {
        auto rng = detail::suite_rng(opt.seed, 1);
        lemma1_suite(suite, rng, opt.lemma1_trials, opt.lemma1_max_n);
    });

    {
        SuiteResult invariant{"theorem2_invariant"};
        SuiteResult intermediates{"proof_intermediates"};
        try {
            auto rng = detail::suite_rng(opt.seed, 2);
            theorem2_suites(invariant, intermediates, rng, opt.theorem2_trials, opt.theorem2_max_n);
        } catch (const std::exception& ex) {
            invariant.record(false, std::string("exception: ") + ex.what());
            intermediates.record(false, std::string("exception: ") + ex.what());
        }
        report.suites.push_back(std::move(invariant));
        report.suites.push_back(std::move(intermediates));
        report.timing_ms.emplace_back("theorem2_invariant", clock.lap_ms());
    }

    detail::run_suite(report, clock, "determinant_oracle", [&](SuiteResult& suite) {
        auto rng = detail::suite_rng(opt.seed, 3);
        determinant_oracle_suite(suite, rng, opt.oracle_trials, opt.oracle_max_dim);
    });

    detail::run_suite(report, clock, "catalan", [&](SuiteResult& suite) { catalan_determinants(opt.catalan_n, suite); });

    finalize(report);
    return report;
}

inline VerifyReport run_somos_verification(std::size_t n_max, std::uint64_t seed) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.seed = seed;
    return run_somos_verification(opt);
}

/// det H_n(C) = 1 for n <= n_max, C = 1 + x C^2.
inline VerifyReport run_catalan_fixture(std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    VerifyReport report;
    report.kind = "catalan";
    report.n_max = n_max;
    report.determinant_cap = n_max;
    detail::Stopwatch clock;
    SuiteResult suite{"catalan"};
    try {
        const Series cat = solve_catalan(2 * n_max - 2);
        report.series.assign(cat.coeffs().begin(), cat.coeffs().end());
        for (const auto& d : catalan_determinants(n_max, suite)) report.route_determinant.emplace_back(d);
    } catch (const std::exception& ex) {
        report.errors.push_back(std::string("catalan: ") + ex.what());
    }
    report.suites.push_back(std::move(suite));
    report.timing_ms.emplace_back("catalan", clock.lap_ms());
    finalize(report);
    return report;
}

}  // namespace somos
