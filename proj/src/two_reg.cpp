#include "ksc/two_reg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ksc {

TwoRegScenario two_reg(const Graph& g)
{
    if (g.num_edges() == 0) throw InvalidArgument("graph has no edges");
    TwoRegScenario out;
    out.source_graph = g;
    auto& h = out.scenario;
    h.hyperedges.assign(static_cast<std::size_t>(g.num_edges()), {});
    for (int i = 0; i < g.num_edges(); ++i) {
        for (int j = i + 1; j < g.num_edges(); ++j) {
            if (!g.edges_intersect(i, j)) continue;
            int w = h.num_nodes++;
            h.node_labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            out.node_origin.emplace_back(i, j);
            h.hyperedges[static_cast<std::size_t>(i)].push_back(w);
            h.hyperedges[static_cast<std::size_t>(j)].push_back(w);
        }
    }
    for (int i = 0; i < g.num_edges(); ++i) {
        if (h.hyperedge(i).empty())
            throw EmptyHyperedge("edge " + std::to_string(i) + " meets no other edge; its context would be empty");
        out.edge_origin.push_back(i);
    }
    return out;
}

std::optional<int> is_hypercycle_scenario(const Scenario& h)
{
    if (!validate(h).valid) return std::nullopt;
    const int n = h.num_nodes;
    if (n < 3 || h.num_edges() != n || !h.is_two_regular()) return std::nullopt;
    std::vector<NodeSet> sorted = h.hyperedges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    for (const auto& f : h.hyperedges)
        if (f.size() != 2) return std::nullopt;
    // 2-regular with pairs: a disjoint union of cycles; require a single one.
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& f : h.hyperedges) {
        nbr[static_cast<std::size_t>(f[0])].push_back(f[1]);
        nbr[static_cast<std::size_t>(f[1])].push_back(f[0]);
    }
    int prev = -1, cur = 0, steps = 0;
    do {
        const auto& nb = nbr[static_cast<std::size_t>(cur)];
        int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != 0 && steps <= n);
    if (steps != n) return std::nullopt;
    return n;
}

Scenario matching_scenario(const Graph& g)
{
    if (g.num_edges() == 0) throw InvalidArgument("graph has no edges");
    Graph lg = line_graph(g);
    Scenario h;
    h.num_nodes = lg.num_edges();
    for (const auto& [a, b] : lg.edges()) h.node_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (int v = 0; v < lg.num_vertices(); ++v) {
        if (lg.degree(v) == 0)
            throw EmptyHyperedge("line-graph vertex " + std::to_string(v) + " is isolated; its context would be empty");
        NodeSet f(lg.incident(v).begin(), lg.incident(v).end());
        h.hyperedges.push_back(std::move(f));
    }
    return h;
}

namespace {

// Bipartite incidence graph: elements 0..N-1 are nodes, N..N+F-1 hyperedges.
struct Incidence {
    int num_nodes = 0;
    std::vector<std::vector<int>> adj;
};

Incidence incidence_of(const Scenario& h)
{
    Incidence inc;
    inc.num_nodes = h.num_nodes;
    inc.adj.assign(static_cast<std::size_t>(h.num_nodes + h.num_edges()), {});
    for (int f = 0; f < h.num_edges(); ++f)
        for (int w : h.hyperedge(f)) {
            inc.adj[static_cast<std::size_t>(w)].push_back(h.num_nodes + f);
            inc.adj[static_cast<std::size_t>(h.num_nodes + f)].push_back(w);
        }
    return inc;
}

// Colour refinement run on both incidence graphs together so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Incidence& a, const Incidence& b)
{
    std::vector<const Incidence*> gs{&a, &b};
    std::vector<std::vector<int>> col(2);
    for (int t = 0; t < 2; ++t)
        for (std::size_t v = 0; v < gs[static_cast<std::size_t>(t)]->adj.size(); ++v) {
            bool is_edge = static_cast<int>(v) >= gs[static_cast<std::size_t>(t)]->num_nodes;
            col[static_cast<std::size_t>(t)].push_back(static_cast<int>(gs[static_cast<std::size_t>(t)]->adj[v].size()) * 2 +
                                                       (is_edge ? 1 : 0));
        }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::vector<int>> next(2);
        for (int t = 0; t < 2; ++t) {
            const auto& g = *gs[static_cast<std::size_t>(t)];
            for (std::size_t v = 0; v < g.adj.size(); ++v) {
                std::vector<int> sig;
                for (int u : g.adj[v]) sig.push_back(col[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)]);
                std::sort(sig.begin(), sig.end());
                auto key = std::make_pair(col[static_cast<std::size_t>(t)][v], std::move(sig));
                auto it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
                next[static_cast<std::size_t>(t)].push_back(it->second);
            }
        }
        col = std::move(next);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {col[0], col[1]};
}

} // namespace

std::optional<std::vector<int>> scenarios_isomorphic(const Scenario& a, const Scenario& b, const SearchOptions& opts)
{
    if (a.num_nodes != b.num_nodes || a.num_edges() != b.num_edges()) return std::nullopt;
    Incidence ia = incidence_of(a), ib = incidence_of(b);
    auto [ca, cb] = refine(ia, ib);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    const int total = static_cast<int>(ia.adj.size());

    // Order: BFS over the incidence graph so every element after the first of
    // its component has an already-mapped neighbour.
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    for (int s = 0; s < total; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int v = order[head++];
            for (int u : ia.adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    order.push_back(u);
                }
        }
    }

    std::vector<std::vector<char>> adj_b(static_cast<std::size_t>(total), std::vector<char>(static_cast<std::size_t>(total), 0));
    for (int v = 0; v < total; ++v)
        for (int u : ib.adj[static_cast<std::size_t>(v)]) adj_b[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;

    std::vector<int> map(static_cast<std::size_t>(total), -1);
    std::vector<char> used(static_cast<std::size_t>(total), 0);
    BudgetCounter budget(opts.budget, "scenario isomorphism search");

    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == order.size()) return true;
        budget.tick();
        int v = order[k];
        for (int t = 0; t < total; ++t) {
            if (used[static_cast<std::size_t>(t)] || cb[static_cast<std::size_t>(t)] != ca[static_cast<std::size_t>(v)]) continue;
            // Mapped neighbours of v must land on neighbours of t; the degree
            // check via colours plus this makes adjacency preserved both ways
            // once all elements are mapped.
            bool ok = true;
            int mapped_nbrs = 0;
            for (int u : ia.adj[static_cast<std::size_t>(v)]) {
                int mu = map[static_cast<std::size_t>(u)];
                if (mu < 0) continue;
                ++mapped_nbrs;
                if (!adj_b[static_cast<std::size_t>(t)][static_cast<std::size_t>(mu)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int mapped_nbrs_b = 0;
            for (int u : ib.adj[static_cast<std::size_t>(t)])
                if (used[static_cast<std::size_t>(u)]) ++mapped_nbrs_b;
            if (mapped_nbrs_b != mapped_nbrs) continue;
            map[static_cast<std::size_t>(v)] = t;
            used[static_cast<std::size_t>(t)] = 1;
            if (rec(k + 1)) return true;
            used[static_cast<std::size_t>(t)] = 0;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return std::vector<int>(map.begin(), map.begin() + a.num_nodes);
}

} // namespace ksc
