#include "ksc/scenario.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ksc {

std::vector<std::vector<int>> Scenario::node_contexts() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(std::max(num_nodes, 0)));
    for (int f = 0; f < num_edges(); ++f)
        for (int w : hyperedge(f))
            if (w >= 0 && w < num_nodes) out[static_cast<std::size_t>(w)].push_back(f);
    return out;
}

std::vector<int> Scenario::node_degrees() const
{
    std::vector<int> deg;
    for (const auto& c : node_contexts()) deg.push_back(static_cast<int>(c.size()));
    return deg;
}

bool Scenario::is_two_regular() const
{
    auto deg = node_degrees();
    return std::all_of(deg.begin(), deg.end(), [](int k) { return k == 2; });
}

Scenario make_scenario(int num_nodes, std::vector<NodeSet> hyperedges)
{
    Scenario h;
    h.num_nodes = num_nodes;
    for (int i = 0; i < num_nodes; ++i) h.node_labels.push_back("w" + std::to_string(i));
    for (auto& f : hyperedges) std::sort(f.begin(), f.end());
    h.hyperedges = std::move(hyperedges);
    return h;
}

Scenario make_hypercycle(int n)
{
    if (n < 3) throw InvalidArgument("hypercycle needs at least 3 nodes");
    std::vector<NodeSet> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return make_scenario(n, std::move(edges));
}

ValidationReport validate(const Scenario& h)
{
    ValidationReport r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.problems.push_back(std::move(msg));
    };
    if (h.num_nodes < 0) {
        fail("negative node count");
        return r;
    }
    if (static_cast<int>(h.node_labels.size()) != h.num_nodes)
        fail("node_labels has " + std::to_string(h.node_labels.size()) + " entries for " +
             std::to_string(h.num_nodes) + " nodes");
    if (h.hyperedges.empty()) fail("no hyperedges");
    std::vector<char> covered(static_cast<std::size_t>(h.num_nodes), 0);
    for (int f = 0; f < h.num_edges(); ++f) {
        const auto& e = h.hyperedge(f);
        if (e.empty()) fail("empty hyperedge " + std::to_string(f));
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0 || e[k] >= h.num_nodes) {
                fail("hyperedge " + std::to_string(f) + " has node index out of range");
                continue;
            }
            covered[static_cast<std::size_t>(e[k])] = 1;
            if (k > 0 && e[k] == e[k - 1]) fail("hyperedge " + std::to_string(f) + " repeats a node");
            if (k > 0 && e[k] < e[k - 1]) fail("hyperedge " + std::to_string(f) + " is not sorted");
        }
    }
    for (int w = 0; w < h.num_nodes; ++w)
        if (!covered[static_cast<std::size_t>(w)]) fail("node " + std::to_string(w) + " lies in no hyperedge");
    return r;
}

void require_valid(const Scenario& h)
{
    auto r = validate(h);
    if (r.valid) return;
    const auto& first = r.problems.front();
    if (first.rfind("empty hyperedge", 0) == 0) throw EmptyHyperedge("invalid scenario: " + first);
    throw InvalidArgument("invalid scenario: " + first);
}

namespace {

void fill_checks(ScenarioProfile& p)
{
    Integer n1 = p.degree_histogram.count(1) ? p.degree_histogram.at(1) : Integer(0);
    p.multi_context_nodes = p.num_nodes - n1;
    Integer slack = 0;
    for (const auto& [k, nk] : p.degree_histogram) slack += (k - 2) * nk;
    slack += n1; // the k = 1 term above contributed -n_1
    const Integer& m = p.multi_context_nodes;
    p.counting_bounds_hold = m <= p.num_nodes && p.num_nodes <= p.incidence_total;
    p.m_at_most_half = 2 * m <= p.incidence_total;
    p.w_at_most_half = 2 * p.num_nodes <= p.incidence_total;
    p.n1_criterion = n1 <= slack;
}

} // namespace

ScenarioProfile profile(const Scenario& h)
{
    require_valid(h);
    ScenarioProfile p;
    p.num_edges = h.num_edges();
    p.num_nodes = h.num_nodes;
    std::set<std::size_t> sizes;
    for (const auto& f : h.hyperedges) {
        sizes.insert(f.size());
        p.incidence_total += static_cast<long>(f.size());
    }
    if (sizes.size() == 1) p.d = static_cast<int>(*sizes.begin());
    for (int k : h.node_degrees()) {
        p.degree_histogram[k] += 1;
        p.max_degree = std::max(p.max_degree, k);
    }
    fill_checks(p);
    return p;
}

ScenarioProfile profile_from_histogram(int d, const std::map<int, Integer>& histogram)
{
    if (d < 1) throw InvalidArgument("hyperedge size must be positive");
    ScenarioProfile p;
    p.d = d;
    p.degree_histogram = histogram;
    for (const auto& [k, nk] : histogram) {
        if (k < 1 || nk < 0) throw InvalidArgument("degree histogram needs k >= 1 and n_k >= 0");
        p.incidence_total += k * nk;
        p.num_nodes += nk;
        if (nk > 0) p.max_degree = std::max(p.max_degree, k);
    }
    if (p.incidence_total % d != 0)
        throw InvalidArgument("sum of k n_k is not a multiple of d");
    p.num_edges = p.incidence_total / d;
    fill_checks(p);
    return p;
}

bool is_probabilistic_model(const Scenario& h, const ProbModel& p)
{
    if (static_cast<int>(p.probabilities.size()) != h.num_nodes)
        throw InvalidArgument("model has " + std::to_string(p.probabilities.size()) + " values for " +
                              std::to_string(h.num_nodes) + " nodes");
    for (const auto& x : p.probabilities)
        if (x < 0 || x > 1) return false;
    for (const auto& f : h.hyperedges) {
        Rational sum = 0;
        for (int w : f) sum += p.probabilities[static_cast<std::size_t>(w)];
        if (sum != 1) return false;
    }
    return true;
}

bool is_transversal(const Scenario& h, const NodeSet& s)
{
    std::vector<char> in(static_cast<std::size_t>(h.num_nodes), 0);
    for (int w : s) {
        if (w < 0 || w >= h.num_nodes) throw InvalidArgument("node index out of range");
        in[static_cast<std::size_t>(w)] = 1;
    }
    for (const auto& f : h.hyperedges)
        if (std::none_of(f.begin(), f.end(), [&](int w) { return in[static_cast<std::size_t>(w)] != 0; }))
            return false;
    return !h.hyperedges.empty();
}

Scenario induced_subscenario(const Scenario& h, const NodeSet& s)
{
    std::vector<int> pos(static_cast<std::size_t>(h.num_nodes), -1);
    Scenario out;
    out.num_nodes = static_cast<int>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= h.num_nodes) throw InvalidArgument("node index out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw InvalidArgument("node set must be sorted and distinct");
        pos[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
        out.node_labels.push_back(h.node_labels.at(static_cast<std::size_t>(s[i])));
    }
    for (int f = 0; f < h.num_edges(); ++f) {
        NodeSet e;
        for (int w : h.hyperedge(f))
            if (pos[static_cast<std::size_t>(w)] >= 0) e.push_back(pos[static_cast<std::size_t>(w)]);
        if (e.empty())
            throw EmptyHyperedge("node set misses hyperedge " + std::to_string(f) + "; not a transversal");
        out.hyperedges.push_back(std::move(e));
    }
    return out;
}

ProbModel extend_model(const Scenario& h, const NodeSet& s, const ProbModel& ps)
{
    Scenario sub = induced_subscenario(h, s);
    if (!is_probabilistic_model(sub, ps)) throw InvalidArgument("not a probabilistic model of the induced subscenario");
    ProbModel p;
    p.probabilities.assign(static_cast<std::size_t>(h.num_nodes), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) p.probabilities[static_cast<std::size_t>(s[i])] = ps.probabilities[i];
    return p;
}

std::vector<NodeSet> find_hypercycles(const Scenario& h, int n, const SearchOptions& opts)
{
    if (n < 3) throw InvalidArgument("hypercycle length must be at least 3");
    require_valid(h);
    const auto N = static_cast<std::size_t>(h.num_nodes);
    std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
    for (const auto& f : h.hyperedges)
        for (int a : f)
            for (int b : f)
                if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    auto contexts = h.node_contexts();

    BudgetCounter budget(opts.budget, "hypercycle search");
    std::vector<NodeSet> out;
    NodeSet chosen;
    std::vector<int> inner_deg(N, 0);           // co-membership degree within chosen
    std::vector<int> edge_load(static_cast<std::size_t>(h.num_edges()), 0); // chosen nodes per hyperedge

    auto connected = [&]() {
        std::vector<char> seen(chosen.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < chosen.size(); ++j)
                if (!seen[j] && adj[static_cast<std::size_t>(chosen[i])][static_cast<std::size_t>(chosen[j])]) {
                    seen[j] = 1;
                    ++count;
                    stack.push_back(j);
                }
        }
        return count == chosen.size();
    };

    std::function<void(int)> rec = [&](int start) {
        budget.tick();
        if (static_cast<int>(chosen.size()) == n) {
            for (int w : chosen)
                if (inner_deg[static_cast<std::size_t>(w)] != 2) return;
            if (connected()) out.push_back(chosen);
            return;
        }
        for (int w = start; w < h.num_nodes; ++w) {
            if (h.num_nodes - w < n - static_cast<int>(chosen.size())) break;
            auto sw = static_cast<std::size_t>(w);
            bool ok = true;
            int deg = 0;
            for (int c : chosen) {
                if (adj[sw][static_cast<std::size_t>(c)]) {
                    ++deg;
                    if (inner_deg[static_cast<std::size_t>(c)] >= 2) ok = false;
                }
            }
            if (!ok || deg > 2) continue;
            for (int f : contexts[sw])
                if (edge_load[static_cast<std::size_t>(f)] >= 2) ok = false;
            if (!ok) continue;

            for (int c : chosen)
                if (adj[sw][static_cast<std::size_t>(c)]) ++inner_deg[static_cast<std::size_t>(c)];
            inner_deg[sw] = deg;
            for (int f : contexts[sw]) ++edge_load[static_cast<std::size_t>(f)];
            chosen.push_back(w);
            rec(w + 1);
            chosen.pop_back();
            for (int f : contexts[sw]) --edge_load[static_cast<std::size_t>(f)];
            inner_deg[sw] = 0;
            for (int c : chosen)
                if (adj[sw][static_cast<std::size_t>(c)]) --inner_deg[static_cast<std::size_t>(c)];
        }
    };
    rec(0);
    return out;
}

bool is_deterministic_context(const Scenario& h, const ProbModel& p, int f)
{
    for (int w : h.hyperedge(f)) {
        const auto& x = p.probabilities.at(static_cast<std::size_t>(w));
        if (x != 0 && x != 1) return false;
    }
    return true;
}

} // namespace ksc
