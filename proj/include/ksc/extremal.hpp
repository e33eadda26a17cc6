#pragma once

#include "ksc/scenario.hpp"
#include "ksc/two_reg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ksc {

struct ExtremalModel {
    ProbModel model;
    NodeSet support;        ///< nodes with nonzero value
    NodeSet singleton_part; ///< nodes valued 1
    /// Odd hypercycles of 1/2-valued nodes, each in cyclic order starting at its
    /// smallest node and stepping toward the smaller of that node's two
    /// neighbours. Empty unless the scenario is 2-regular.
    std::vector<std::vector<int>> hypercycle_part;

    bool operator==(const ExtremalModel&) const = default;
};

enum class UniqueStatus { unique, no_model, multiple };

struct UniqueModelResult {
    UniqueStatus status = UniqueStatus::no_model;
    std::optional<ProbModel> model; ///< set iff unique
};

/// Exact LP: feasibility of the normalisation system, then min and max of every
/// coordinate; unique iff they coincide everywhere.
UniqueModelResult unique_model(const Scenario& h);

/// Vertices of the model polytope via induced subscenarios with a unique
/// full-support model. Sorted by support.
std::vector<ExtremalModel> enumerate_extremal_models(const Scenario& h, const SearchOptions& opts = {});

/// 2-regular route: a matching of 1-valued nodes plus disjoint odd hypercycles
/// of 1/2-valued nodes covering every context. Throws InvalidArgument if the
/// scenario is not 2-regular. Sorted by support.
std::vector<ExtremalModel> enumerate_extremal_models_2reg(const Scenario& h, const SearchOptions& opts = {});
std::vector<ExtremalModel> enumerate_extremal_models_2reg(const TwoRegScenario& h, const SearchOptions& opts = {});

enum class ExtremalMethod { automatic, general, structural };

/// Structural route for 2-regular scenarios, general route otherwise.
std::vector<ExtremalModel> extremal_models(const Scenario& h, ExtremalMethod method = ExtremalMethod::automatic,
                                           const SearchOptions& opts = {});

/// Models of 2Reg(K_{m,n}) whose only indeterministic part is one k-hypercycle
/// built from k edges at a common vertex, with every other context
/// deterministic. Requires mn > 1 odd, k odd, 3 <= k <= max(m, n).
std::vector<ExtremalModel> khypercycle_models_kmn(int m, int n, int k, const SearchOptions& opts = {});

/// Indices of contexts on which the model is {0,1}-valued.
std::vector<int> deterministic_contexts(const Scenario& h, const ProbModel& p);

/// Fewest indeterministic contexts over the given extremal models.
/// Throws InvalidArgument if some model is fully deterministic.
int smallest_indeterministic_size(const Scenario& h, const std::vector<ExtremalModel>& extremals);
int smallest_indeterministic_size(const Scenario& h, const SearchOptions& opts = {});

/// Checks that p is a vertex: support columns independent and p the unique
/// solution on them.
bool is_vertex(const Scenario& h, const ProbModel& p);

} // namespace ksc
