#pragma once

#include "ksc/graph.hpp"
#include "ksc/scenario.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ksc {

/// 2Reg(G) together with the bookkeeping back to G.
struct TwoRegScenario {
    Scenario scenario;
    Graph source_graph;
    std::vector<std::pair<int, int>> node_origin; ///< node -> (e_i, e_j), i < j
    std::vector<int> edge_origin;                 ///< hyperedge -> source edge
};

/// Nodes are intersecting edge pairs (i, j), i < j, in lexicographic order;
/// hyperedge f_i collects the pairs containing e_i. Isolated vertices are ignored.
/// Throws InvalidArgument on an edgeless graph and EmptyHyperedge when some edge
/// meets no other edge.
TwoRegScenario two_reg(const Graph& g);

/// n if h is an n-hypercycle up to relabelling, else nullopt.
std::optional<int> is_hypercycle_scenario(const Scenario& h);

/// Mat(L(g)): one node per edge of the line graph, one hyperedge per line-graph
/// vertex collecting its incident line-graph edges.
Scenario matching_scenario(const Graph& g);

/// A node bijection phi (a-node i -> b-node phi[i]) mapping the multiset of
/// hyperedges of a onto that of b, or nullopt.
std::optional<std::vector<int>> scenarios_isomorphic(const Scenario& a, const Scenario& b,
                                                     const SearchOptions& opts = {});

} // namespace ksc
