#include "ksc/extremal.hpp"

#include "ksc/linalg.hpp"
#include "ksc/lp.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>

namespace ksc {

namespace {

Vector column_of(const std::vector<std::vector<int>>& contexts, int w, std::size_t F)
{
    Vector col(F, Rational(0));
    for (int f : contexts[static_cast<std::size_t>(w)]) col[static_cast<std::size_t>(f)] = 1;
    return col;
}

// Nodes of a cycle given in cyclic order, rotated to start at the smallest
// node and oriented toward its smaller neighbour.
std::vector<int> canonical_cycle(std::vector<int> cyc)
{
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

// For 2-regular scenarios: groups the 1/2-valued nodes into cycles by shared contexts.
std::vector<std::vector<int>> half_cycles(const Scenario& h, const ProbModel& p)
{
    const Rational half(1, 2);
    auto contexts = h.node_contexts();
    std::vector<int> half_nodes;
    for (int w = 0; w < h.num_nodes; ++w)
        if (p.probabilities[static_cast<std::size_t>(w)] == half) half_nodes.push_back(w);
    std::map<int, std::vector<int>> by_context;
    for (int w : half_nodes)
        for (int f : contexts[static_cast<std::size_t>(w)]) by_context[f].push_back(w);
    std::vector<char> seen(static_cast<std::size_t>(h.num_nodes), 0);
    std::vector<std::vector<int>> out;
    for (int start : half_nodes) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int cur = start;
        while (cur >= 0 && !seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = 1;
            cyc.push_back(cur);
            int next = -1;
            for (int f : contexts[static_cast<std::size_t>(cur)])
                for (int u : by_context[f])
                    if (u != cur && !seen[static_cast<std::size_t>(u)] && (next < 0 || u < next)) next = u;
            cur = next;
        }
        out.push_back(canonical_cycle(std::move(cyc)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExtremalModel annotate(const Scenario& h, ProbModel p, bool two_regular)
{
    ExtremalModel m;
    bool half_only = true;
    for (int w = 0; w < h.num_nodes; ++w) {
        const auto& x = p.probabilities[static_cast<std::size_t>(w)];
        if (x == 0) continue;
        m.support.push_back(w);
        if (x == 1)
            m.singleton_part.push_back(w);
        else if (x != Rational(1, 2))
            half_only = false;
    }
    if (two_regular && half_only) m.hypercycle_part = half_cycles(h, p);
    m.model = std::move(p);
    return m;
}

void sort_models(std::vector<ExtremalModel>& v)
{
    std::sort(v.begin(), v.end(), [](const ExtremalModel& a, const ExtremalModel& b) {
        if (a.support != b.support) return a.support < b.support;
        return a.model.probabilities < b.model.probabilities;
    });
}

} // namespace

bool is_vertex(const Scenario& h, const ProbModel& p)
{
    if (!is_probabilistic_model(h, p)) return false;
    auto contexts = h.node_contexts();
    EchelonBasis basis(static_cast<std::size_t>(h.num_edges()));
    for (int w = 0; w < h.num_nodes; ++w)
        if (p.probabilities[static_cast<std::size_t>(w)] != 0 &&
            !basis.try_add(column_of(contexts, w, static_cast<std::size_t>(h.num_edges()))))
            return false;
    return true;
}

UniqueModelResult unique_model(const Scenario& h)
{
    require_valid(h);
    const auto N = static_cast<std::size_t>(h.num_nodes);
    LinearProgram lp;
    for (const auto& f : h.hyperedges) {
        Vector row(N, Rational(0));
        for (int w : f) row[static_cast<std::size_t>(w)] = 1;
        lp.a.push_back(std::move(row));
        lp.b.emplace_back(1);
    }
    lp.c.assign(N, Rational(0));
    UniqueModelResult res;
    auto first = solve_lp(lp);
    if (first.status != LpStatus::optimal) return res;

    ProbModel p;
    for (std::size_t w = 0; w < N; ++w) {
        lp.c.assign(N, Rational(0));
        lp.c[w] = 1;
        auto lo = solve_lp(lp);
        lp.c[w] = -1;
        auto hi = solve_lp(lp);
        if (lo.status != LpStatus::optimal || hi.status != LpStatus::optimal) throw Error("internal: bounded LP not optimal");
        if (lo.objective != -hi.objective) {
            res.status = UniqueStatus::multiple;
            return res;
        }
        p.probabilities.push_back(lo.objective);
    }
    res.status = UniqueStatus::unique;
    res.model = std::move(p);
    return res;
}

std::vector<ExtremalModel> enumerate_extremal_models(const Scenario& h, const SearchOptions& opts)
{
    require_valid(h);
    const auto N = static_cast<std::size_t>(h.num_nodes);
    const auto F = static_cast<std::size_t>(h.num_edges());
    const auto contexts = h.node_contexts();
    const bool two_regular = h.is_two_regular();
    std::vector<Vector> cols;
    for (std::size_t w = 0; w < N; ++w) cols.push_back(column_of(contexts, static_cast<int>(w), F));
    std::vector<int> last_node(F);
    for (std::size_t f = 0; f < F; ++f) last_node[f] = h.hyperedges[f].back();

    BudgetCounter budget(opts.budget, "extremal model enumeration");

    // DFS over node sets with linearly independent incidence columns, in
    // increasing node order. A transversal S whose system A_S x = 1 has a
    // positive solution is exactly the support of a vertex.
    auto run_from = [&](int first) {
        std::vector<ExtremalModel> found;
        NodeSet S;
        std::vector<int> hits(F, 0);
        std::size_t unhit = F;
        std::function<void(int, const EchelonBasis&)> rec = [&](int next, const EchelonBasis& basis) {
            budget.tick();
            for (std::size_t f = 0; f < F; ++f)
                if (hits[f] == 0 && last_node[f] < next) return;
            if (unhit == 0) {
                Matrix a(F, Vector(S.size()));
                for (std::size_t j = 0; j < S.size(); ++j)
                    for (std::size_t f = 0; f < F; ++f) a[f][j] = cols[static_cast<std::size_t>(S[j])][f];
                auto x = solve_full_column_rank(std::move(a), Vector(F, Rational(1)));
                if (x && std::all_of(x->begin(), x->end(), [](const Rational& r) { return r > 0; })) {
                    ProbModel p;
                    p.probabilities.assign(N, Rational(0));
                    for (std::size_t j = 0; j < S.size(); ++j) p.probabilities[static_cast<std::size_t>(S[j])] = (*x)[j];
                    found.push_back(annotate(h, std::move(p), two_regular));
                }
            }
            for (int w = next; w < static_cast<int>(N); ++w) {
                EchelonBasis grown = basis;
                if (!grown.try_add(cols[static_cast<std::size_t>(w)])) continue;
                S.push_back(w);
                for (int f : contexts[static_cast<std::size_t>(w)])
                    if (hits[static_cast<std::size_t>(f)]++ == 0) --unhit;
                rec(w + 1, grown);
                for (int f : contexts[static_cast<std::size_t>(w)])
                    if (--hits[static_cast<std::size_t>(f)] == 0) ++unhit;
                S.pop_back();
            }
        };
        EchelonBasis basis(F);
        basis.try_add(cols[static_cast<std::size_t>(first)]);
        S.push_back(first);
        for (int f : contexts[static_cast<std::size_t>(first)])
            if (hits[static_cast<std::size_t>(f)]++ == 0) --unhit;
        rec(first + 1, basis);
        return found;
    };

    std::vector<ExtremalModel> out;
    if (opts.parallel) {
        std::vector<std::future<std::vector<ExtremalModel>>> tasks;
        for (std::size_t w = 0; w < N; ++w) tasks.push_back(std::async(std::launch::async, run_from, static_cast<int>(w)));
        for (auto& t : tasks) {
            auto part = t.get();
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    } else {
        for (std::size_t w = 0; w < N; ++w) {
            auto part = run_from(static_cast<int>(w));
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    sort_models(out);
    return out;
}

namespace {

// Contexts as vertices, nodes as edges.
struct Dual {
    std::vector<std::pair<int, int>> ends;
    const Scenario* h = nullptr;

    explicit Dual(const Scenario& s) : h(&s)
    {
        for (const auto& c : s.node_contexts()) ends.emplace_back(c[0], c[1]);
    }
    int other(int w, int c) const
    {
        const auto& e = ends[static_cast<std::size_t>(w)];
        return e.first == c ? e.second : e.first;
    }
};

} // namespace

std::vector<ExtremalModel> enumerate_extremal_models_2reg(const Scenario& h, const SearchOptions& opts)
{
    require_valid(h);
    if (!h.is_two_regular()) throw InvalidArgument("scenario is not 2-regular");
    const Dual dual(h);
    const auto F = static_cast<std::size_t>(h.num_edges());
    BudgetCounter budget(opts.budget, "structural extremal enumeration");

    std::vector<char> covered(F, 0);
    std::vector<int> singles;
    std::vector<std::vector<int>> cycles;
    std::vector<ExtremalModel> out;

    auto odd_cycles_through = [&](int v) {
        std::vector<std::vector<int>> found;
        std::vector<int> path;
        std::vector<char> on_path(F, 0);
        on_path[static_cast<std::size_t>(v)] = 1;
        std::function<void(int)> walk = [&](int cur) {
            budget.tick();
            for (int w : h.hyperedge(cur)) {
                int u = dual.other(w, cur);
                if (u == v) {
                    if (path.size() + 1 >= 3 && (path.size() + 1) % 2 == 1 && !path.empty() && path.front() < w) {
                        path.push_back(w);
                        found.push_back(path);
                        path.pop_back();
                    }
                    continue;
                }
                if (covered[static_cast<std::size_t>(u)] || on_path[static_cast<std::size_t>(u)]) continue;
                on_path[static_cast<std::size_t>(u)] = 1;
                path.push_back(w);
                walk(u);
                path.pop_back();
                on_path[static_cast<std::size_t>(u)] = 0;
            }
        };
        walk(v);
        return found;
    };

    std::function<void()> rec = [&]() {
        budget.tick();
        std::size_t v = 0;
        while (v < F && covered[v]) ++v;
        if (v == F) {
            ProbModel p;
            p.probabilities.assign(static_cast<std::size_t>(h.num_nodes), Rational(0));
            for (int w : singles) p.probabilities[static_cast<std::size_t>(w)] = 1;
            for (const auto& cyc : cycles)
                for (int w : cyc) p.probabilities[static_cast<std::size_t>(w)] = Rational(1, 2);
            if (!is_vertex(h, p)) throw Error("internal: structural candidate is not a vertex");
            out.push_back(annotate(h, std::move(p), true));
            return;
        }
        const int vc = static_cast<int>(v);
        covered[v] = 1;
        for (int w : h.hyperedge(vc)) {
            int u = dual.other(w, vc);
            if (covered[static_cast<std::size_t>(u)]) continue;
            covered[static_cast<std::size_t>(u)] = 1;
            singles.push_back(w);
            rec();
            singles.pop_back();
            covered[static_cast<std::size_t>(u)] = 0;
        }
        for (auto& cyc : odd_cycles_through(vc)) {
            std::vector<int> ctx;
            int cur = vc;
            for (int w : cyc) {
                cur = dual.other(w, cur);
                if (cur != vc) ctx.push_back(cur);
            }
            for (int c : ctx) covered[static_cast<std::size_t>(c)] = 1;
            cycles.push_back(cyc);
            rec();
            cycles.pop_back();
            for (int c : ctx) covered[static_cast<std::size_t>(c)] = 0;
        }
        covered[v] = 0;
    };
    rec();
    sort_models(out);
    return out;
}

std::vector<ExtremalModel> enumerate_extremal_models_2reg(const TwoRegScenario& h, const SearchOptions& opts)
{
    return enumerate_extremal_models_2reg(h.scenario, opts);
}

std::vector<ExtremalModel> extremal_models(const Scenario& h, ExtremalMethod method, const SearchOptions& opts)
{
    switch (method) {
    case ExtremalMethod::general: return enumerate_extremal_models(h, opts);
    case ExtremalMethod::structural: return enumerate_extremal_models_2reg(h, opts);
    case ExtremalMethod::automatic: break;
    }
    require_valid(h);
    return h.is_two_regular() ? enumerate_extremal_models_2reg(h, opts) : enumerate_extremal_models(h, opts);
}

std::vector<ExtremalModel> khypercycle_models_kmn(int m, int n, int k, const SearchOptions& opts)
{
    if (m < 1 || n < 1 || (m * n) % 2 == 0 || m * n == 1) throw InvalidArgument("need mn > 1 and odd");
    if (k < 3 || k % 2 == 0 || k > std::max(m, n)) throw InvalidArgument("need odd k with 3 <= k <= max(m, n)");
    Graph g = make_complete_bipartite(m, n);
    TwoRegScenario tr = two_reg(g);
    const Scenario& h = tr.scenario;
    std::map<std::pair<int, int>, int> node_of;
    for (std::size_t w = 0; w < tr.node_origin.size(); ++w) node_of[tr.node_origin[w]] = static_cast<int>(w);
    auto node_between = [&](int a, int b) { return node_of.at({std::min(a, b), std::max(a, b)}); };
    const Dual dual(h);
    BudgetCounter budget(opts.budget, "k-hypercycle model construction");

    std::vector<ExtremalModel> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident(v);
        if (static_cast<int>(inc.size()) < k) continue;
        std::vector<char> pick(inc.size(), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            std::vector<int> chosen;
            for (std::size_t i = 0; i < inc.size(); ++i)
                if (pick[i]) chosen.push_back(inc[i]);
            std::vector<char> in_cycle(static_cast<std::size_t>(g.num_edges()), 0);
            for (int e : chosen) in_cycle[static_cast<std::size_t>(e)] = 1;

            // Perfect pairings of the remaining contexts through nodes avoiding the cycle.
            std::vector<std::vector<int>> pairings;
            std::vector<char> covered(in_cycle);
            std::vector<int> singles;
            std::function<void()> pair_rest = [&]() {
                budget.tick();
                std::size_t c = 0;
                while (c < covered.size() && covered[c]) ++c;
                if (c == covered.size()) {
                    pairings.push_back(singles);
                    return;
                }
                covered[c] = 1;
                for (int w : h.hyperedge(static_cast<int>(c))) {
                    int u = dual.other(w, static_cast<int>(c));
                    if (covered[static_cast<std::size_t>(u)]) continue;
                    covered[static_cast<std::size_t>(u)] = 1;
                    singles.push_back(w);
                    pair_rest();
                    singles.pop_back();
                    covered[static_cast<std::size_t>(u)] = 0;
                }
                covered[c] = 0;
            };
            pair_rest();

            // Cyclic orders of the chosen edges, first edge fixed, one per reversal pair.
            std::vector<int> rest(chosen.begin() + 1, chosen.end());
            do {
                if (rest.front() > rest.back()) continue;
                std::vector<int> order{chosen.front()};
                order.insert(order.end(), rest.begin(), rest.end());
                std::vector<int> cyc;
                for (std::size_t i = 0; i < order.size(); ++i)
                    cyc.push_back(node_between(order[i], order[(i + 1) % order.size()]));
                for (const auto& singles_set : pairings) {
                    ProbModel p;
                    p.probabilities.assign(static_cast<std::size_t>(h.num_nodes), Rational(0));
                    for (int w : cyc) p.probabilities[static_cast<std::size_t>(w)] = Rational(1, 2);
                    for (int w : singles_set) p.probabilities[static_cast<std::size_t>(w)] = 1;
                    out.push_back(annotate(h, std::move(p), true));
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    sort_models(out);
    return out;
}

std::vector<int> deterministic_contexts(const Scenario& h, const ProbModel& p)
{
    std::vector<int> out;
    for (int f = 0; f < h.num_edges(); ++f)
        if (is_deterministic_context(h, p, f)) out.push_back(f);
    return out;
}

int smallest_indeterministic_size(const Scenario& h, const std::vector<ExtremalModel>& extremals)
{
    if (extremals.empty()) throw InvalidArgument("no extremal models given");
    int best = h.num_edges() + 1;
    for (const auto& e : extremals) {
        int ind = h.num_edges() - static_cast<int>(deterministic_contexts(h, e.model).size());
        if (ind == 0) throw InvalidArgument("scenario is KS-colourable; the smallest indeterministic size is undefined");
        best = std::min(best, ind);
    }
    return best;
}

int smallest_indeterministic_size(const Scenario& h, const SearchOptions& opts)
{
    return smallest_indeterministic_size(h, extremal_models(h, ExtremalMethod::automatic, opts));
}

} // namespace ksc
