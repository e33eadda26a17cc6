#pragma once

#include "ksc/options.hpp"

#include <utility>
#include <vector>

namespace ksc {

using Edge = std::pair<int, int>;

/// Sorted list of edge indices into a parent graph.
using EdgeSet = std::vector<int>;

/// Undirected simple graph on vertices 0..num_vertices-1.
class Graph {
public:
    Graph() = default;
    /// Throws InvalidArgument on loops, repeated edges or out-of-range endpoints.
    /// Endpoints are stored with the smaller vertex first.
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

    /// Indices of edges touching v, ascending.
    const std::vector<int>& incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    bool edges_intersect(int i, int j) const;

    /// Component id per vertex (isolated vertices get their own ids), ids dense from 0.
    std::vector<int> vertex_components() const;

    bool operator==(const Graph& other) const
    {
        return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
    }

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

Graph make_complete_bipartite(int m, int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_claw();

/// One vertex per edge of g; adjacency is edge intersection. Edge order is
/// lexicographic in the (i, j) vertex pairs.
Graph line_graph(const Graph& g);

bool is_edge_cover(const Graph& g, const EdgeSet& s);

/// All inclusion-minimal edge covers in lexicographic order.
/// Throws NoCoverExists if g has an isolated vertex.
std::vector<EdgeSet> enumerate_minimal_edge_covers(const Graph& g, const SearchOptions& opts = {});

/// Minimal covers of minimum cardinality.
std::vector<EdgeSet> enumerate_minimum_edge_covers(const Graph& g, const SearchOptions& opts = {});

std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g, const SearchOptions& opts = {});

/// Number of connected components of the spanning subgraph (V, s).
/// Throws InvalidArgument if s is not an edge cover.
int cover_components(const Graph& g, const EdgeSet& s);

} // namespace ksc
