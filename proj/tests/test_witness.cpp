#include "ksc/witness.hpp"

#include <gtest/gtest.h>

using namespace ksc;

namespace {

struct Instance {
    Scenario h;
    std::vector<ExtremalModel> ms;
};

const Instance& k33()
{
    static const Instance d{two_reg(make_complete_bipartite(3, 3)).scenario, {}};
    static const Instance full{d.h, extremal_models(d.h)};
    return full;
}

const Instance& k17()
{
    static const Scenario h = two_reg(make_complete_bipartite(1, 7)).scenario;
    static const Instance full{h, extremal_models(h)};
    return full;
}

ContextSet range(int n)
{
    ContextSet c;
    for (int i = 0; i < n; ++i) c.push_back(i);
    return c;
}

Rational uniform_beta(const Instance& d, const ContextSet& c)
{
    return beta(d.h, QDist::uniform(c), d.ms);
}

ContextData table(int index, std::vector<std::vector<Rational>> rows)
{
    return ContextData{index, std::move(rows)};
}

} // namespace

TEST(Zeta, Values)
{
    Scenario h3 = make_hypercycle(3);
    ProbModel half{{Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
    EXPECT_EQ(zeta(h3, half, 0), Rational(1, 2));
    EXPECT_EQ(zeta(make_hypercycle(4), ProbModel{{1, 0, 1, 0}}, 2), 1);
    for (const auto& m : k33().ms)
        for (int f = 0; f < 9; ++f) {
            Rational z = zeta(k33().h, m, f);
            EXPECT_TRUE(z == 1 || z == Rational(1, 2));
        }
}

TEST(Beta, K33Values)
{
    const auto& d = k33();
    EXPECT_EQ(uniform_beta(d, {0, 4, 8}), Rational(5, 6));
    EXPECT_EQ(uniform_beta(d, {0, 1, 5, 8}), Rational(7, 8));
    EXPECT_EQ(uniform_beta(d, {0, 1, 2, 3, 4, 5, 8}), Rational(13, 14));
    EXPECT_EQ(uniform_beta(d, range(9)), Rational(5, 6));
}

TEST(Beta, K17Values)
{
    const auto& d = k17();
    EXPECT_EQ(uniform_beta(d, {0, 1, 2, 3, 4}), Rational(9, 10));
    EXPECT_EQ(uniform_beta(d, range(6)), Rational(5, 6));
    EXPECT_EQ(uniform_beta(d, range(7)), Rational(11, 14));
}

TEST(Beta, StarClosedForms)
{
    for (int n : {5, 7}) {
        Scenario h = two_reg(make_complete_bipartite(1, n)).scenario;
        Instance d{h, extremal_models(h)};
        EXPECT_EQ(uniform_beta(d, range(n - 2)), 1 - Rational(1, 2 * (n - 2)));
        EXPECT_EQ(uniform_beta(d, range(n - 1)), 1 - Rational(1, n - 1));
        EXPECT_EQ(uniform_beta(d, range(n)), 1 - Rational(3, 2 * n));
    }
}

TEST(Beta, NonMiscReachesOne)
{
    EXPECT_EQ(uniform_beta(k33(), {0, 4}), 1);
}

TEST(Beta, UndefinedWhenColourable)
{
    Scenario h = two_reg(make_complete_bipartite(2, 3)).scenario;
    EXPECT_THROW(beta(h, QDist::uniform(range(6)), extremal_models(h)), UndefinedBeta);
}

TEST(Beta, CoarseGrainingOfDisjointMatchings)
{
    const auto& d = k33();
    // Three disjoint perfect matchings partition the nine edges.
    std::vector<ContextSet> parts{{0, 4, 8}, {1, 5, 6}, {2, 3, 7}};
    Rational mixed = 0;
    for (const auto& p : parts) mixed += uniform_beta(d, p) / 3;
    EXPECT_EQ(mixed, uniform_beta(d, range(9)));
}

TEST(QDistTest, UniformAndValidation)
{
    QDist q = QDist::uniform({1, 3});
    EXPECT_EQ(q.weights.at(1), Rational(1, 2));
    EXPECT_EQ(q.support(), (ContextSet{1, 3}));
    validate_q(make_hypercycle(4), q);
    EXPECT_THROW(validate_q(make_hypercycle(3), QDist{{{0, Rational(1, 2)}}}), InvalidArgument);
    EXPECT_THROW(validate_q(make_hypercycle(3), QDist{{{0, Rational(3, 2)}, {1, Rational(-1, 2)}}}), InvalidArgument);
    EXPECT_THROW(validate_q(make_hypercycle(3), QDist{{{5, 1}}}), InvalidArgument);
    QDist with_zero{{{0, 1}, {1, 0}}};
    EXPECT_EQ(with_zero.support(), (ContextSet{0}));
}

TEST(Inequality, ClosedFormAttached)
{
    const auto& d = k33();
    ContextSet seven{0, 1, 2, 3, 4, 5, 8};
    auto ineq = make_inequality(d.h, seven, QDist::uniform(seven), d.ms);
    EXPECT_EQ(ineq.beta, Rational(13, 14));
    EXPECT_EQ(ineq.derivation, Derivation::closed_form_misc);
    ASSERT_TRUE(ineq.closed_form);
    EXPECT_EQ(ineq.closed_form->k, 3);
    EXPECT_EQ(ineq.closed_form->c, 7);
    EXPECT_EQ(ineq.closed_form->p_max, Rational(1, 2));
    EXPECT_EQ(ineq.closed_form->bound, Rational(13, 14));
    EXPECT_NE(ineq.expression.find("13/14"), std::string::npos);
    EXPECT_EQ(to_string(ineq.derivation), "closed-form-misc");
}

TEST(Inequality, ExactMaxOtherwise)
{
    const auto& d = k33();
    auto ineq = make_inequality(d.h, {0, 4, 8}, QDist::uniform({0, 4, 8}), d.ms);
    EXPECT_EQ(ineq.beta, Rational(5, 6));
    EXPECT_EQ(ineq.derivation, Derivation::exact_max);
    EXPECT_FALSE(ineq.closed_form);
    EXPECT_THROW(make_inequality(d.h, {0, 4}, QDist::uniform({0, 4, 8}), d.ms), InvalidArgument);
}

TEST(Inequality, StarSufficientSizeHitsBound)
{
    const auto& d = k17();
    ContextSet five{0, 1, 2, 3, 4};
    auto ineq = make_inequality(d.h, five, QDist::uniform(five), d.ms);
    ASSERT_TRUE(ineq.closed_form);
    EXPECT_EQ(ineq.closed_form->bound, ineq.beta);
}

TEST(Data, CorrBasics)
{
    Scenario h = two_reg(make_complete_bipartite(3, 3)).scenario;
    auto perfect = synthetic_data(h, {0, 4, 8}, 0);
    EXPECT_EQ(corr(perfect, QDist::uniform({0, 4, 8})), 1);
    auto noise = synthetic_data(h, {0, 4, 8}, 1);
    EXPECT_EQ(corr(noise, QDist::uniform({0, 4, 8})), Rational(1, 4));
    Rational eps(2, 7);
    EXPECT_EQ(corr(synthetic_data(h, {0, 4, 8}, eps), QDist::uniform({0, 4, 8})), 1 - eps * (1 - Rational(1, 4)));
    EXPECT_THROW(corr(perfect, QDist::uniform({0, 1})), InvalidArgument);
    EXPECT_THROW(synthetic_data(h, {0}, Rational(3, 2)), InvalidArgument);
}

TEST(Data, Validation)
{
    DataTable ok{{table(0, {{Rational(1, 2), 0}, {0, Rational(1, 2)}})}};
    validate_data(ok);
    EXPECT_EQ(source_marginal(ok.contexts[0]), (Vector{Rational(1, 2), Rational(1, 2)}));
    EXPECT_THROW(validate_data(DataTable{{table(0, {{1, 0}, {0, 1}})}}), InvalidArgument);
    EXPECT_THROW(validate_data(DataTable{{table(0, {{Rational(3, 2), Rational(-1, 2)}, {0, 0}})}}), InvalidArgument);
    EXPECT_THROW(validate_data(DataTable{{table(0, {{1, 0}})}}), InvalidArgument);
    EXPECT_EQ(ok.find(0), &ok.contexts[0]);
    EXPECT_EQ(ok.find(3), nullptr);
}

TEST(Evaluate, ViolationAndBoundary)
{
    const auto& d = k33();
    auto all = range(9);
    auto ineq = make_inequality(d.h, all, QDist::uniform(all), d.ms);
    auto perfect = evaluate(synthetic_data(d.h, all, 0), ineq);
    EXPECT_EQ(perfect.corr, 1);
    EXPECT_TRUE(perfect.violated);
    EXPECT_EQ(perfect.margin, Rational(1, 6));

    Rational threshold = (1 - ineq.beta) / (1 - Rational(1, 4));
    auto edge = evaluate(synthetic_data(d.h, all, threshold), ineq);
    EXPECT_EQ(edge.corr, ineq.beta);
    EXPECT_FALSE(edge.violated);
    EXPECT_EQ(edge.margin, 0);

    auto noisy = evaluate(synthetic_data(d.h, all, 1), ineq);
    EXPECT_FALSE(noisy.violated);
    EXPECT_EQ(noisy.corr, Rational(1, 4));
}

TEST(NcModel, TriangleGoldenResultIsInfeasible)
{
    Scenario h = two_reg(make_claw()).scenario;
    auto ms = extremal_models(h);
    auto att = build_saturating_nc_model(h, QDist::uniform({0, 1, 2}), {}, ms);
    EXPECT_EQ(att.beta, Rational(1, 2));
    EXPECT_EQ(att.lambda_max, (std::vector<int>{0}));
    EXPECT_EQ(att.lambda_detp, (std::vector<int>{0}));
    EXPECT_FALSE(att.feasible);
    ASSERT_TRUE(att.failure_reason);
    EXPECT_EQ(*att.failure_reason, NcFailure::phen_constraint_infeasible);
    ASSERT_TRUE(att.farkas);
    EXPECT_TRUE(is_farkas_certificate(att.lp.a, att.lp.b, *att.farkas));
    EXPECT_EQ(att.ties.size(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(att.mu_retro.at({0, i}), 0);
}

TEST(NcModel, FeasibleWhenMarginalsMatchRetrodiction)
{
    Scenario h = two_reg(make_claw()).scenario;
    auto ms = extremal_models(h);
    std::map<int, Vector> marg{{0, {1, 0}}, {1, {1, 0}}, {2, {1, 0}}};
    auto att = build_saturating_nc_model(h, QDist::uniform({0, 1, 2}), marg, ms);
    ASSERT_TRUE(att.feasible);
    EXPECT_FALSE(att.failure_reason);
    ASSERT_TRUE(att.reconstructed);
    validate_data(*att.reconstructed);
    for (const auto& c : att.reconstructed->contexts) EXPECT_EQ(source_marginal(c), marg.at(c.index));
    EXPECT_EQ(corr(*att.reconstructed, QDist::uniform({0, 1, 2})), att.beta);
}

TEST(NcModel, EmptyIntersection)
{
    Scenario h = two_reg(make_claw()).scenario;
    auto ms = extremal_models(h);
    std::map<int, Vector> marg{{0, {0, 1}}};
    auto att = build_saturating_nc_model(h, QDist::uniform({0, 1, 2}), marg, ms);
    EXPECT_FALSE(att.feasible);
    ASSERT_TRUE(att.failure_reason);
    EXPECT_EQ(*att.failure_reason, NcFailure::lambda_intersection_empty);
    EXPECT_EQ(to_string(*att.failure_reason), "lambda-intersection-empty");
    EXPECT_TRUE(att.lambda_detp.empty());
}

TEST(NcModel, RejectsBadMarginals)
{
    Scenario h = two_reg(make_claw()).scenario;
    auto ms = extremal_models(h);
    EXPECT_THROW(build_saturating_nc_model(h, QDist::uniform({0}), {{0, {1}}}, ms), InvalidArgument);
    EXPECT_THROW(build_saturating_nc_model(h, QDist::uniform({0}), {{0, {Rational(1, 2), Rational(1, 3)}}}, ms), InvalidArgument);
}
