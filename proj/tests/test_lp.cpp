#include "ksc/linalg.hpp"
#include "ksc/lp.hpp"

#include <gtest/gtest.h>

using namespace ksc;

namespace {

Vector vec(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Residual check done by hand rather than trusting the solver's own bookkeeping.
bool satisfies(const LinearProgram& lp, const Vector& x)
{
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t i = 0; i < lp.a.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += lp.a[i][j] * x[j];
        if (s != lp.b[i]) return false;
    }
    return true;
}

} // namespace

TEST(Linalg, RankAndEchelon)
{
    EXPECT_EQ(rank({vec({1, 2}), vec({2, 4})}), 1u);
    EXPECT_EQ(rank({vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 0})}), 3u);
    EchelonBasis b(3);
    EXPECT_TRUE(b.try_add(vec({1, 1, 0})));
    EXPECT_TRUE(b.try_add(vec({0, 1, 1})));
    EXPECT_FALSE(b.try_add(vec({1, 2, 1})));
    EXPECT_EQ(b.rank(), 2u);
}

TEST(Linalg, FullColumnRankSolve)
{
    // Overdetermined but consistent.
    auto x = solve_full_column_rank({vec({1, 0}), vec({0, 1}), vec({1, 1})}, vec({2, 3, 5}));
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, vec({2, 3}));
    EXPECT_FALSE(solve_full_column_rank({vec({1, 0}), vec({0, 1}), vec({1, 1})}, vec({2, 3, 4})));
    auto half = solve_full_column_rank({vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1})}, vec({1, 1, 1}));
    ASSERT_TRUE(half);
    for (const auto& v : *half) EXPECT_EQ(v, Rational(1, 2));
}

TEST(Lp, SimpleOptimum)
{
    // min -x - y  s.t. x + y + s = 4, x + 3y + t = 6.
    LinearProgram lp{{vec({1, 1, 1, 0}), vec({1, 3, 0, 1})}, vec({4, 6}), vec({-1, -1, 0, 0})};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.objective, -4);
    EXPECT_TRUE(satisfies(lp, r.x));
}

TEST(Lp, FractionalOptimum)
{
    // max x  s.t. 2x + 3y = 1 -> x = 1/2.
    LinearProgram lp{{vec({2, 3})}, vec({1}), vec({-1, 0})};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.x[0], Rational(1, 2));
    EXPECT_EQ(r.objective, Rational(-1, 2));
}

TEST(Lp, InfeasibleCarriesCertificate)
{
    LinearProgram lp{{vec({1, 1}), vec({1, 1})}, vec({1, 2}), vec({0, 0})};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::infeasible);
    ASSERT_TRUE(r.farkas);
    EXPECT_TRUE(is_farkas_certificate(lp.a, lp.b, *r.farkas));

    // Negative right-hand side that cannot be met with x >= 0.
    LinearProgram neg{{vec({1, 2})}, vec({-3}), vec({0, 0})};
    auto s = solve_lp(neg);
    ASSERT_EQ(s.status, LpStatus::infeasible);
    ASSERT_TRUE(s.farkas);
    EXPECT_TRUE(is_farkas_certificate(neg.a, neg.b, *s.farkas));
}

TEST(Lp, Unbounded)
{
    LinearProgram lp{{vec({1, -1})}, vec({1}), vec({-1, 0})};
    EXPECT_EQ(solve_lp(lp).status, LpStatus::unbounded);
}

TEST(Lp, RedundantRows)
{
    LinearProgram lp{{vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 1, 1})}, vec({1, 2, 1}), vec({1, 0, 0})};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.objective, 0);
    EXPECT_TRUE(satisfies(lp, r.x));
}

TEST(Lp, DegenerateCyclingExampleTerminates)
{
    // Beale's example in equality form; cycles under the textbook largest-coefficient rule.
    LinearProgram lp;
    lp.a = {
        {Rational(1, 4), Rational(-8), Rational(-1), Rational(9), 1, 0, 0},
        {Rational(1, 2), Rational(-12), Rational(-1, 2), Rational(3), 0, 1, 0},
        {0, 0, 1, 0, 0, 0, 1},
    };
    lp.b = vec({0, 0, 1});
    lp.c = {Rational(-3, 4), Rational(20), Rational(-1, 2), Rational(6), 0, 0, 0};
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.objective, Rational(-5, 4));
    EXPECT_TRUE(satisfies(lp, r.x));
}

TEST(Farkas, CheckerRejectsNonCertificates)
{
    Matrix a{vec({1, 1})};
    EXPECT_FALSE(is_farkas_certificate(a, vec({1}), vec({1})));
    EXPECT_TRUE(is_farkas_certificate(a, vec({-1}), vec({-1})));
    EXPECT_FALSE(is_farkas_certificate(a, vec({0}), vec({-1})));
}
