#pragma once

#include "ksc/options.hpp"
#include "ksc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ksc {

/// Sorted list of node indices.
using NodeSet = std::vector<int>;

/// Hypergraph H = (W, F). Nodes are outcomes, hyperedges are contexts.
/// Construction does not validate; call validate() on untrusted input.
struct Scenario {
    int num_nodes = 0;
    std::vector<std::string> node_labels;
    std::vector<NodeSet> hyperedges;

    int num_edges() const { return static_cast<int>(hyperedges.size()); }
    const NodeSet& hyperedge(int i) const { return hyperedges.at(static_cast<std::size_t>(i)); }

    /// Contexts containing each node, ascending.
    std::vector<std::vector<int>> node_contexts() const;
    std::vector<int> node_degrees() const;
    bool is_two_regular() const;

    bool operator==(const Scenario&) const = default;
};

/// Builds a scenario with labels "w0", "w1", ... and sorted hyperedges.
Scenario make_scenario(int num_nodes, std::vector<NodeSet> hyperedges);

/// n nodes, hyperedges {i, i+1 mod n}.
Scenario make_hypercycle(int n);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> problems;
};

ValidationReport validate(const Scenario& h);

/// Throws InvalidArgument (EmptyHyperedge when applicable) with the first problem.
void require_valid(const Scenario& h);

struct ScenarioProfile {
    std::optional<int> d;            ///< uniform hyperedge size, nullopt when non-uniform
    Integer num_edges = 0;           ///< |F|
    Integer num_nodes = 0;           ///< |W|
    std::map<int, Integer> degree_histogram; ///< k -> n_k
    int max_degree = 0;              ///< D
    Integer multi_context_nodes = 0; ///< m = |W| - n_1
    Integer incidence_total = 0;     ///< d|F|, or the sum of hyperedge sizes when non-uniform

    bool counting_bounds_hold = false; ///< m <= |W| <= d|F|
    bool m_at_most_half = false;       ///< m <= d|F|/2
    bool w_at_most_half = false;       ///< |W| <= d|F|/2
    bool n1_criterion = false;         ///< n_1 <= sum_k (k-2) n_k
};

ScenarioProfile profile(const Scenario& h);

/// Profile arithmetic from a d-uniform degree histogram alone; |F| is recovered
/// from d|F| = sum k n_k. Throws InvalidArgument if d does not divide the sum.
ScenarioProfile profile_from_histogram(int d, const std::map<int, Integer>& histogram);

struct ProbModel {
    std::vector<Rational> probabilities;
    bool operator==(const ProbModel&) const = default;
};

/// Throws InvalidArgument on a size mismatch.
bool is_probabilistic_model(const Scenario& h, const ProbModel& p);

bool is_transversal(const Scenario& h, const NodeSet& s);

/// Restriction H_S. Node i of the result is s[i]; duplicate contexts are kept.
/// Throws EmptyHyperedge if s is not a transversal.
Scenario induced_subscenario(const Scenario& h, const NodeSet& s);

/// Pads a model on H_S with zeros. Throws InvalidArgument if ps is not a model of H_S.
ProbModel extend_model(const Scenario& h, const NodeSet& s, const ProbModel& ps);

/// All node sets forming an n-hypercycle inside h, lexicographic.
std::vector<NodeSet> find_hypercycles(const Scenario& h, int n, const SearchOptions& opts = {});

bool is_deterministic_context(const Scenario& h, const ProbModel& p, int f);

} // namespace ksc
