#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "somos/somos4.hpp"
#include "somos/sulanke_xin.hpp"

namespace somos {
namespace {

SomosWindow window(long a, long b, long c, long d) { return SomosWindow{{a, b, c, d}, 3}; }

TEST(Somos4Extend, Examples) {
    EXPECT_EQ(somos4_extend(window(1, 1, 2, 3)).newest(), Rational(7));
    EXPECT_EQ(somos4_extend(window(1, 2, 3, 7)).newest(), Rational(23));
    EXPECT_EQ(somos4_extend(window(1, 1, 1, 1)).newest(), Rational(2));
    EXPECT_EQ(somos4_extend(window(1, 1, 2, 3)).index, 4U);
}

TEST(Somos4Extend, ZeroOldestTermThrows) {
    try {
        (void)somos4_extend(window(0, 1, 2, 3));
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "Somos recurrence undefined");
    }
}

TEST(SomosSequence, KnownTerms) {
    const long expected[] = {1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313, 620297, 7869898, 126742987};
    const auto seq = somos_sequence(13);
    ASSERT_EQ(seq.size(), 14U);
    for (std::size_t n = 0; n < seq.size(); ++n) EXPECT_EQ(seq[n], Rational(expected[n])) << n;
    EXPECT_EQ(somos_sequence(3).size(), 4U);
    EXPECT_EQ(somos_sequence(0).size(), 1U);
}

TEST(SomosSequence, LaurentIntegrality) {
    const auto seq = somos_sequence(40);
    for (const auto& s : seq) EXPECT_TRUE(s.is_integer()) << s;
    EXPECT_EQ(seq[20].str(), "4257998884448335457");
}

TEST(CheckRecA, Examples) {
    const std::vector<Rational> a{1, 2, rat(3, 4), rat(14, 9)};
    EXPECT_TRUE(check_rec_a(a, 2));
    EXPECT_TRUE(check_rec_a(a, 3));
    const std::vector<Rational> ones{1, 1, 1};
    EXPECT_FALSE(check_rec_a(ones, 2));
    EXPECT_THROW(check_rec_a(ones, 1), std::out_of_range);
    EXPECT_THROW(check_rec_a(ones, 3), std::out_of_range);
}

TEST(An2Step, Examples) {
    EXPECT_EQ(an2_step(1, 2), rat(3, 4));
    EXPECT_EQ(an2_step(2, rat(3, 4)), rat(14, 9));
    EXPECT_THROW(an2_step(1, 0), std::domain_error);
}

TEST(An2Step, SequenceSatisfiesRecA) {
    const auto a = an2_sequence(1, 2, 50);
    for (std::size_t n = 2; n <= 50; ++n) EXPECT_TRUE(check_rec_a(a, n)) << n;
}

TEST(An2Step, MatchesIteratedStates) {
    const auto st = iterate_states(somos_seed_state(), 30);
    const auto a = an2_sequence(st[0].a, st[1].a, 30);
    for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(a[n], st[n].a) << n;
}

TEST(Theorem2Rhs, SomosInstance) {
    const Theorem2Params p{1, 2, 0, 1, -2};
    EXPECT_EQ(theorem2_rhs(p, 2), rat(7, 2));
    // a_2 a_1 + a_1 a_0 = 4 - 1/a_1 forces a_2 = 3/4.
    EXPECT_EQ((theorem2_rhs(p, 2) - Rational(2) * Rational(1)) / Rational(2), rat(3, 4));
    EXPECT_THROW(theorem2_rhs(p, 0), std::domain_error);
}

TEST(Theorem2Rhs, DegenerateCase) {
    // f0 + f1 + c = 0 leaves only 2 a0 a1.
    const Theorem2Params p{rat(3, 2), rat(-5, 7), 1, 2, -3};
    EXPECT_EQ(theorem2_rhs(p, rat(9, 11)), Rational(2) * p.a0 * p.a1);
    EXPECT_EQ(theorem2_rhs(p, -4), Rational(2) * p.a0 * p.a1);
}

TEST(Theorem2Rhs, RandomTrajectories) {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        CoeffState s0{0, testing::random_rational(rng, 5), testing::random_rational(rng, 5), testing::random_rational(rng, 5),
                      testing::random_rational(rng, 5), -1, testing::random_rational(rng, 5)};
        if (s0.a.is_zero()) continue;
        std::vector<CoeffState> st;
        try {
            st = iterate_states(s0, 12);
        } catch (const TransformError&) {
            continue;
        }
        const Theorem2Params p{st[0].a, st[1].a, st[0].f, st[1].f, st[0].c};
        for (std::size_t n = 0; n + 2 < st.size(); ++n) {
            EXPECT_EQ(st[n + 2].a * st[n + 1].a + st[n + 1].a * st[n].a, theorem2_rhs(p, st[n + 1].a)) << s0 << " n=" << n;
        }
        ++checked;
    }
    EXPECT_GT(checked, 40);
}

TEST(TValue, Examples) {
    EXPECT_EQ(t_value(1, 2), Rational(0));
    EXPECT_EQ(t_value(0, 0), Rational(-1));
}

TEST(TValue, VanishesAlongClosedFormSequence) {
    const auto a = an2_sequence(1, 2, 50);
    for (std::size_t n = 2; n <= 50; ++n) EXPECT_TRUE(t_value(a[n - 2], a[n - 1]).is_zero()) << n;
}

TEST(TValue, TelescopingStep) {
    // Replacing a_{n-1} by the closed-form step from (a_{n-3}, a_{n-2})
    // turns T(n) into T(n-1), for any nonzero a_{n-2}.
    const auto a = an2_sequence(1, 2, 50);
    for (std::size_t n = 3; n <= 50; ++n) {
        const Rational next = an2_step(a[n - 3], a[n - 2]);
        EXPECT_EQ(next, a[n - 1]);
        EXPECT_EQ(t_value(a[n - 2], next), t_value(a[n - 3], a[n - 2])) << n;
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational u = testing::random_rational(rng);
        const Rational v = testing::random_rational(rng);
        if (v.is_zero()) continue;
        EXPECT_EQ(t_value(v, an2_step(u, v)), t_value(u, v)) << u << " " << v;
    }
}

TEST(ASequence, FromStates) {
    const auto st = iterate_states(somos_seed_state(), 4);
    const auto seq = a_sequence(st);
    ASSERT_EQ(seq.a.size(), 5U);
    EXPECT_EQ(seq.f[1], Rational(1));
    EXPECT_EQ(seq.a[3], rat(14, 9));
}

}  // namespace
}  // namespace somos
