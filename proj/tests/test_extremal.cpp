#include "ksc/extremal.hpp"

#include "oracles/brute.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ksc;

namespace {

std::set<std::vector<Rational>> as_points(const std::vector<ExtremalModel>& ms)
{
    std::set<std::vector<Rational>> out;
    for (const auto& m : ms) out.insert(m.model.probabilities);
    return out;
}

std::set<std::vector<Rational>> as_points(const std::vector<std::vector<Rational>>& ps)
{
    return {ps.begin(), ps.end()};
}

} // namespace

TEST(UniqueModel, Statuses)
{
    auto h3 = unique_model(make_hypercycle(3));
    ASSERT_EQ(h3.status, UniqueStatus::unique);
    for (const auto& v : h3.model->probabilities) EXPECT_EQ(v, Rational(1, 2));

    EXPECT_EQ(unique_model(make_hypercycle(4)).status, UniqueStatus::multiple);
    EXPECT_EQ(unique_model(make_scenario(2, {{0}, {1}, {0, 1}})).status, UniqueStatus::no_model);

    auto single = unique_model(make_scenario(1, {{0}}));
    ASSERT_EQ(single.status, UniqueStatus::unique);
    EXPECT_EQ(single.model->probabilities, (std::vector<Rational>{1}));
}

TEST(Extremal, ThreeRoutesAgree)
{
    std::vector<Graph> graphs{make_claw(), make_cycle(3), make_cycle(4), make_cycle(5), make_cycle(6), make_complete_bipartite(1, 5)};
    for (const auto& g : graphs) {
        Scenario h = two_reg(g).scenario;
        auto structural = enumerate_extremal_models_2reg(h);
        auto general = enumerate_extremal_models(h);
        EXPECT_EQ(as_points(structural), as_points(general));
        EXPECT_EQ(as_points(structural), as_points(oracle::polytope_vertices(h)));
        EXPECT_EQ(structural, general);
    }
}

TEST(Extremal, ValueSetAndDecomposition)
{
    Scenario h = two_reg(make_complete_bipartite(1, 5)).scenario;
    for (const auto& m : enumerate_extremal_models_2reg(h)) {
        EXPECT_TRUE(is_probabilistic_model(h, m.model));
        EXPECT_TRUE(is_vertex(h, m.model));
        NodeSet rebuilt = m.singleton_part;
        for (const auto& cyc : m.hypercycle_part) {
            EXPECT_EQ(cyc.size() % 2, 1u);
            EXPECT_EQ(cyc.front(), *std::min_element(cyc.begin(), cyc.end()));
            EXPECT_LT(cyc[1], cyc.back());
            rebuilt.insert(rebuilt.end(), cyc.begin(), cyc.end());
        }
        std::sort(rebuilt.begin(), rebuilt.end());
        EXPECT_EQ(rebuilt, m.support);
        for (std::size_t w = 0; w < m.model.probabilities.size(); ++w) {
            const auto& v = m.model.probabilities[w];
            EXPECT_TRUE(v == 0 || v == 1 || v == Rational(1, 2));
        }
    }
}

TEST(Extremal, Counts)
{
    EXPECT_EQ(extremal_models(two_reg(make_claw()).scenario).size(), 1u);
    EXPECT_EQ(extremal_models(two_reg(make_complete_bipartite(1, 5)).scenario).size(), 22u);
    EXPECT_EQ(extremal_models(two_reg(make_complete_bipartite(1, 7)).scenario).size(), 717u);
    EXPECT_EQ(extremal_models(two_reg(make_complete_bipartite(2, 3)).scenario).size(), 5u);
}

TEST(Extremal, HypercycleModelIsAllHalf)
{
    for (int n : {3, 5, 7}) {
        auto ms = extremal_models(make_hypercycle(n));
        ASSERT_EQ(ms.size(), 1u);
        EXPECT_EQ(ms[0].hypercycle_part.size(), 1u);
        EXPECT_TRUE(ms[0].singleton_part.empty());
    }
    // Even hypercycles: the two alternating colourings.
    EXPECT_EQ(extremal_models(make_hypercycle(6)).size(), 2u);
}

TEST(Extremal, GeneralRouteOnNonTwoRegular)
{
    Scenario h = make_scenario(4, {{0, 1, 2}, {2, 3}, {0, 3}});
    auto general = extremal_models(h);
    EXPECT_EQ(as_points(general), as_points(oracle::polytope_vertices(h)));
    EXPECT_THROW(enumerate_extremal_models_2reg(h), InvalidArgument);
    EXPECT_THROW(extremal_models(h, ExtremalMethod::structural), InvalidArgument);
}

TEST(Extremal, ParallelMatchesSerial)
{
    Scenario h = two_reg(make_complete_bipartite(1, 5)).scenario;
    SearchOptions par;
    par.parallel = true;
    EXPECT_EQ(enumerate_extremal_models(h), enumerate_extremal_models(h, par));
    EXPECT_EQ(enumerate_extremal_models_2reg(h), enumerate_extremal_models_2reg(h, par));
}

TEST(Extremal, Budget)
{
    SearchOptions tiny;
    tiny.budget = 10;
    EXPECT_THROW(enumerate_extremal_models(two_reg(make_complete_bipartite(3, 3)).scenario, tiny), BudgetExceeded);
}

TEST(IsVertex, Rejections)
{
    Scenario h = make_hypercycle(4);
    EXPECT_TRUE(is_vertex(h, ProbModel{{1, 0, 1, 0}}));
    EXPECT_FALSE(is_vertex(h, ProbModel{{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}}));
}

TEST(Determinism, ContextsAndSmallestIndeterministicSize)
{
    Scenario h = two_reg(make_complete_bipartite(3, 3)).scenario;
    auto ms = extremal_models(h);
    EXPECT_EQ(smallest_indeterministic_size(h, ms), 3);
    EXPECT_EQ(smallest_indeterministic_size(two_reg(make_complete_bipartite(1, 7)).scenario), 3);
    EXPECT_EQ(smallest_indeterministic_size(two_reg(make_complete_bipartite(1, 5)).scenario), 3);
    EXPECT_THROW(smallest_indeterministic_size(two_reg(make_complete_bipartite(2, 3)).scenario), InvalidArgument);

    EXPECT_EQ(deterministic_contexts(make_hypercycle(4), ProbModel{{1, 0, 1, 0}}), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_TRUE(deterministic_contexts(make_hypercycle(3), ProbModel{{Rational(1, 2), Rational(1, 2), Rational(1, 2)}}).empty());
}

TEST(KHypercycleModels, StarCounts)
{
    // K_{1,7}, k = 3: C(7,3) edge triples, one cyclic order, then the 3 pairings of the other 4 contexts.
    auto k3 = khypercycle_models_kmn(1, 7, 3);
    EXPECT_EQ(k3.size(), 105u);
    Scenario h = two_reg(make_complete_bipartite(1, 7)).scenario;
    for (const auto& m : k3) {
        EXPECT_TRUE(is_vertex(h, m.model));
        EXPECT_EQ(deterministic_contexts(h, m.model).size(), 4u);
        ASSERT_EQ(m.hypercycle_part.size(), 1u);
        EXPECT_EQ(m.hypercycle_part[0].size(), 3u);
    }
    // k = 5: C(7,5) * 4!/2 cyclic orders * 1 pairing.
    EXPECT_EQ(khypercycle_models_kmn(1, 7, 5).size(), 21u * 12u);
    // k = 7: 6!/2 orders, nothing left to pair.
    EXPECT_EQ(khypercycle_models_kmn(1, 7, 7).size(), 360u);
    EXPECT_THROW(khypercycle_models_kmn(3, 3, 4), InvalidArgument);
    EXPECT_THROW(khypercycle_models_kmn(2, 3, 3), InvalidArgument);
}

TEST(KHypercycleModels, SubsetOfFullEnumeration)
{
    Scenario h = two_reg(make_complete_bipartite(3, 3)).scenario;
    auto all = as_points(extremal_models(h));
    auto k3 = khypercycle_models_kmn(3, 3, 3);
    EXPECT_FALSE(k3.empty());
    for (const auto& m : k3) EXPECT_TRUE(all.count(m.model.probabilities));
}
