#include "brute.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

using ksc::EdgeSet;
using ksc::Graph;
using ksc::Rational;
using ksc::Scenario;

namespace {

bool covers(const Graph& g, std::uint64_t mask)
{
    std::vector<char> hit(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int e = 0; e < g.num_edges(); ++e)
        if (mask >> e & 1) {
            hit[static_cast<std::size_t>(g.edge(e).first)] = 1;
            hit[static_cast<std::size_t>(g.edge(e).second)] = 1;
        }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
}

EdgeSet to_set(std::uint64_t mask, int ne)
{
    EdgeSet s;
    for (int e = 0; e < ne; ++e)
        if (mask >> e & 1) s.push_back(e);
    return s;
}

} // namespace

std::vector<EdgeSet> brute_minimal_covers(const Graph& g)
{
    if (g.num_edges() > 24) throw std::invalid_argument("too many edges for brute force");
    std::vector<EdgeSet> out;
    const std::uint64_t total = 1ULL << g.num_edges();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!covers(g, mask)) continue;
        bool minimal = true;
        for (int e = 0; e < g.num_edges() && minimal; ++e)
            if ((mask >> e & 1) && covers(g, mask & ~(1ULL << e))) minimal = false;
        if (minimal) out.push_back(to_set(mask, g.num_edges()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeSet> brute_minimum_covers(const Graph& g)
{
    const std::uint64_t total = 1ULL << g.num_edges();
    std::size_t best = static_cast<std::size_t>(g.num_edges()) + 1;
    std::vector<EdgeSet> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!covers(g, mask)) continue;
        auto s = to_set(mask, g.num_edges());
        if (s.size() < best) {
            best = s.size();
            out.clear();
        }
        if (s.size() == best) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeSet> brute_perfect_matchings(const Graph& g)
{
    std::vector<EdgeSet> out;
    const std::uint64_t total = 1ULL << g.num_edges();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
        for (int e = 0; e < g.num_edges(); ++e)
            if (mask >> e & 1) {
                ++deg[static_cast<std::size_t>(g.edge(e).first)];
                ++deg[static_cast<std::size_t>(g.edge(e).second)];
            }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) out.push_back(to_set(mask, g.num_edges()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int brute_components(const Graph& g, const EdgeSet& s)
{
    std::vector<int> label(static_cast<std::size_t>(g.num_vertices()));
    for (std::size_t v = 0; v < label.size(); ++v) label[v] = static_cast<int>(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e : s) {
            auto& a = label[static_cast<std::size_t>(g.edge(e).first)];
            auto& b = label[static_cast<std::size_t>(g.edge(e).second)];
            if (a != b) {
                a = b = std::min(a, b);
                changed = true;
            }
        }
    }
    return static_cast<int>(std::set<int>(label.begin(), label.end()).size());
}

bool brute_colourable(const Scenario& h)
{
    if (h.num_nodes > 24) throw std::invalid_argument("too many nodes for brute force");
    const std::uint64_t total = 1ULL << h.num_nodes;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const auto& f : h.hyperedges) {
            int ones = 0;
            for (int w : f) ones += static_cast<int>(mask >> w & 1);
            if (ones != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

using Mat = std::vector<std::vector<Rational>>;

// Gauss-Jordan on a copy; returns rank and leaves m in reduced form.
std::size_t reduce(Mat& m, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational piv = m[r][c];
        for (auto& x : m[r]) x /= piv;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c] != 0) {
                Rational f = m[i][c];
                for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
            }
        ++r;
    }
    return r;
}

} // namespace

std::vector<std::vector<Rational>> polytope_vertices(const Scenario& h)
{
    const auto N = static_cast<std::size_t>(h.num_nodes);
    const auto F = static_cast<std::size_t>(h.num_edges());
    Mat a(F, std::vector<Rational>(N, Rational(0)));
    for (std::size_t f = 0; f < F; ++f)
        for (int w : h.hyperedges[f]) a[f][static_cast<std::size_t>(w)] = 1;
    Mat probe = a;
    const std::size_t r = reduce(probe, N);

    std::set<std::vector<Rational>> found;
    std::vector<int> pick(N, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(r), pick.end(), 1);
    do {
        std::vector<std::size_t> basis;
        for (std::size_t j = 0; j < N; ++j)
            if (pick[j]) basis.push_back(j);
        Mat m(F, std::vector<Rational>(r + 1));
        for (std::size_t f = 0; f < F; ++f) {
            for (std::size_t k = 0; k < r; ++k) m[f][k] = a[f][basis[k]];
            m[f][r] = 1;
        }
        if (reduce(m, r) != r) continue;
        bool consistent = true;
        for (std::size_t f = r; f < F; ++f)
            if (m[f][r] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rational> p(N, Rational(0));
        bool nonneg = true;
        for (std::size_t k = 0; k < r; ++k) {
            // After full reduction with rank r, row k has its pivot in column k.
            p[basis[k]] = m[k][r];
            if (m[k][r] < 0) nonneg = false;
        }
        if (nonneg) found.insert(p);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

std::vector<ksc::NodeSet> brute_hypercycles(const Scenario& h, int n)
{
    const auto N = static_cast<std::size_t>(h.num_nodes);
    if (n > h.num_nodes) return {};
    auto together = [&](const std::vector<int>& nodes) {
        for (const auto& f : h.hyperedges)
            if (std::all_of(nodes.begin(), nodes.end(), [&](int w) { return std::binary_search(f.begin(), f.end(), w); }))
                return true;
        return false;
    };
    std::vector<ksc::NodeSet> out;
    std::vector<int> pick(N, 0);
    std::fill(pick.begin(), pick.begin() + n, 1);
    do {
        ksc::NodeSet s;
        for (std::size_t i = 0; i < N; ++i)
            if (pick[i]) s.push_back(static_cast<int>(i));
        // Some cyclic order must make exactly the consecutive pairs co-contextual
        // and no subset of three or more may share a context.
        bool bad_triple = false;
        std::vector<int> sub;
        std::function<void(std::size_t)> triples = [&](std::size_t start) {
            if (bad_triple) return;
            if (sub.size() >= 3 && together(sub)) {
                bad_triple = true;
                return;
            }
            for (std::size_t i = start; i < s.size(); ++i) {
                sub.push_back(s[i]);
                triples(i + 1);
                sub.pop_back();
            }
        };
        triples(0);
        if (bad_triple) continue;
        std::vector<int> perm(s.begin() + 1, s.end());
        bool ok = false;
        do {
            std::vector<int> cyc{s[0]};
            cyc.insert(cyc.end(), perm.begin(), perm.end());
            bool good = true;
            for (int i = 0; i < n && good; ++i)
                for (int j = i + 1; j < n && good; ++j) {
                    bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
                    if (together({cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(j)]}) != consecutive) good = false;
                }
            ok = good;
        } while (!ok && std::next_permutation(perm.begin(), perm.end()));
        if (ok) out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

long long product_formula_cover_count(int m, int n)
{
    const int hi = std::max(m, n), lo = std::min(m, n), diff = hi - lo;
    long long num = 1;
    for (int i = diff + 1; i <= hi; ++i) num *= i; // hi! / diff!
    for (int i = 0; i < diff; ++i) num *= lo;
    return num;
}

long long surjection_cover_count(int m, int n)
{
    const int hi = std::max(m, n), lo = std::min(m, n);
    long long total = 0;
    long long binom = 1; // C(lo, j)
    for (int j = 0; j <= lo; ++j) {
        long long pw = 1;
        for (int i = 0; i < hi; ++i) pw *= lo - j;
        total += (j % 2 ? -1 : 1) * binom * pw;
        binom = binom * (lo - j) / (j + 1);
    }
    return total;
}

} // namespace oracle
