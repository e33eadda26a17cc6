#include "ksc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace ksc {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges))
{
    if (num_vertices_ < 0) throw InvalidArgument("negative vertex count");
    incident_.assign(static_cast<std::size_t>(num_vertices_), {});
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& [u, v] = edges_[i];
        if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_)
            throw InvalidArgument("edge " + std::to_string(i) + " has an endpoint out of range");
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert(edges_[i]).second)
            throw InvalidArgument("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        incident_[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
        incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
}

bool Graph::edges_intersect(int i, int j) const
{
    const auto& a = edge(i);
    const auto& b = edge(j);
    return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

std::vector<int> Graph::vertex_components() const
{
    std::vector<int> comp(static_cast<std::size_t>(num_vertices_), -1);
    int next = 0;
    for (int s = 0; s < num_vertices_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : incident(v)) {
                int w = edge(e).first == v ? edge(e).second : edge(e).first;
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

Graph make_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1) throw InvalidArgument("complete bipartite graph needs both parts nonempty");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph(m + n, std::move(edges));
}

Graph make_cycle(int n)
{
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n)
{
    if (n < 2) throw InvalidArgument("complete graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_claw()
{
    return make_complete_bipartite(1, 3);
}

Graph line_graph(const Graph& g)
{
    std::vector<Edge> edges;
    for (int i = 0; i < g.num_edges(); ++i)
        for (int j = i + 1; j < g.num_edges(); ++j)
            if (g.edges_intersect(i, j)) edges.emplace_back(i, j);
    return Graph(g.num_edges(), std::move(edges));
}

bool is_edge_cover(const Graph& g, const EdgeSet& s)
{
    std::vector<char> hit(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int e : s) {
        if (e < 0 || e >= g.num_edges()) throw InvalidArgument("edge index out of range");
        hit[static_cast<std::size_t>(g.edge(e).first)] = 1;
        hit[static_cast<std::size_t>(g.edge(e).second)] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace {

void require_no_isolated(const Graph& g)
{
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) throw NoCoverExists("vertex " + std::to_string(v) + " is isolated; no edge cover exists");
}

} // namespace

std::vector<EdgeSet> enumerate_minimal_edge_covers(const Graph& g, const SearchOptions& opts)
{
    require_no_isolated(g);
    const int ne = g.num_edges();
    const auto nv = static_cast<std::size_t>(g.num_vertices());
    BudgetCounter budget(opts.budget, "minimal edge cover enumeration");

    // Include/exclude over edges in index order. A vertex whose last incident
    // edge gets excluded while still uncovered kills the branch; minimality
    // (every chosen edge has an endpoint of cover-degree 1) is checked at leaves.
    std::vector<int> last_edge(nv, -1);
    for (std::size_t v = 0; v < nv; ++v) last_edge[v] = g.incident(static_cast<int>(v)).back();

    std::vector<int> cover_deg(nv, 0);
    EdgeSet chosen;
    std::vector<EdgeSet> out;

    std::function<void(int)> rec = [&](int e) {
        budget.tick();
        if (e == ne) {
            for (int c : chosen) {
                auto [u, v] = g.edge(c);
                if (cover_deg[static_cast<std::size_t>(u)] > 1 && cover_deg[static_cast<std::size_t>(v)] > 1) return;
            }
            out.push_back(chosen);
            return;
        }
        auto [u, v] = g.edge(e);
        auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);

        // Both endpoints already covered: the edge could never be necessary.
        if (cover_deg[su] == 0 || cover_deg[sv] == 0) {
            ++cover_deg[su];
            ++cover_deg[sv];
            chosen.push_back(e);
            rec(e + 1);
            chosen.pop_back();
            --cover_deg[su];
            --cover_deg[sv];
        }
        bool u_dead = last_edge[su] == e && cover_deg[su] == 0;
        bool v_dead = last_edge[sv] == e && cover_deg[sv] == 0;
        if (!u_dead && !v_dead) rec(e + 1);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeSet> enumerate_minimum_edge_covers(const Graph& g, const SearchOptions& opts)
{
    auto all = enumerate_minimal_edge_covers(g, opts);
    if (all.empty()) return all;
    std::size_t best = all.front().size();
    for (const auto& s : all) best = std::min(best, s.size());
    std::vector<EdgeSet> out;
    for (auto& s : all)
        if (s.size() == best) out.push_back(std::move(s));
    return out;
}

std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g, const SearchOptions& opts)
{
    std::vector<EdgeSet> out;
    if (g.num_vertices() % 2 != 0) return out;
    BudgetCounter budget(opts.budget, "perfect matching enumeration");
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    EdgeSet chosen;
    std::function<void()> rec = [&]() {
        budget.tick();
        auto it = std::find(used.begin(), used.end(), 0);
        if (it == used.end()) {
            EdgeSet s = chosen;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        int v = static_cast<int>(it - used.begin());
        used[static_cast<std::size_t>(v)] = 1;
        for (int e : g.incident(v)) {
            int w = g.edge(e).first == v ? g.edge(e).second : g.edge(e).first;
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            chosen.push_back(e);
            rec();
            chosen.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        used[static_cast<std::size_t>(v)] = 0;
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

int cover_components(const Graph& g, const EdgeSet& s)
{
    if (!is_edge_cover(g, s)) throw InvalidArgument("edge set is not an edge cover");
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = g.num_vertices();
    for (int e : s) {
        int a = find(g.edge(e).first), b = find(g.edge(e).second);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

} // namespace ksc
