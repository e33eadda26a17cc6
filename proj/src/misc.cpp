#include "ksc/misc.hpp"

#include "ksc/graph.hpp"

#include <algorithm>
#include <functional>

namespace ksc {

namespace {

void check_contexts(const Scenario& h, const ContextSet& c)
{
    if (c.empty()) throw InvalidArgument("empty context set");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= h.num_edges()) throw InvalidArgument("context index out of range");
        if (i > 0 && c[i] <= c[i - 1]) throw InvalidArgument("context set must be sorted and distinct");
    }
}

Rational zeta_of(const Scenario& h, const ProbModel& p, int f)
{
    Rational best = 0;
    for (int w : h.hyperedge(f)) best = std::max(best, p.probabilities[static_cast<std::size_t>(w)]);
    return best;
}

} // namespace

DeterminismIndex::DeterminismIndex(const Scenario& h, const std::vector<ExtremalModel>& extremals)
    : num_contexts_(h.num_edges())
{
    std::vector<Bits> all;
    for (const auto& e : extremals) {
        Bits b(static_cast<std::size_t>(num_contexts_));
        for (int f : deterministic_contexts(h, e.model)) b.set(static_cast<std::size_t>(f));
        max_det_ = std::max(max_det_, static_cast<int>(b.count()));
        all.push_back(std::move(b));
    }
    std::sort(all.begin(), all.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a < b;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (auto& b : all) {
        bool dominated = std::any_of(maximal_.begin(), maximal_.end(), [&](const Bits& m) { return b.is_subset_of(m); });
        if (!dominated) maximal_.push_back(std::move(b));
    }
}

DeterminismIndex::Bits DeterminismIndex::to_bits(const ContextSet& c) const
{
    Bits b(static_cast<std::size_t>(num_contexts_));
    for (int f : c) b.set(static_cast<std::size_t>(f));
    return b;
}

bool DeterminismIndex::is_misc(const ContextSet& c) const
{
    Bits b = to_bits(c);
    return std::none_of(maximal_.begin(), maximal_.end(), [&](const Bits& m) { return b.is_subset_of(m); });
}

MiscReport is_misc(const Scenario& h, const ContextSet& c, const std::vector<ExtremalModel>& extremals)
{
    check_contexts(h, c);
    MiscReport r;
    r.is_misc = true;
    for (const auto& e : extremals) {
        int nondet = -1, count = 0;
        for (int f : c)
            if (!is_deterministic_context(h, e.model, f)) {
                nondet = f;
                ++count;
            }
        if (count == 0) {
            r.is_misc = false;
            r.counterexample = e;
            r.p_max.reset();
            return r;
        }
        if (count == 1) {
            Rational z = zeta_of(h, e.model, nondet);
            if (!r.p_max || z > *r.p_max) r.p_max = z;
        }
    }
    // No all-but-one model: every 2-regular extremal value is 0, 1/2 or 1.
    if (!r.p_max && h.is_two_regular()) r.p_max = Rational(1, 2);
    return r;
}

MiscReport is_irr_misc(const Scenario& h, const ContextSet& c, const std::vector<ExtremalModel>& extremals)
{
    MiscReport r = is_misc(h, c, extremals);
    if (!r.is_misc) return r;
    // Supersets of MISCs are MISCs, so the (c-1)-subsets decide irreducibility.
    DeterminismIndex index(h, extremals);
    if (c.size() > 1) {
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            ContextSet sub;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) sub.push_back(c[i]);
            if (index.is_misc(sub)) {
                r.reducing_subset = std::move(sub);
                return r;
            }
        }
    }
    r.is_irr = true;
    return r;
}

std::vector<ContextSet> enumerate_irr_miscs(const Scenario& h, const std::vector<ExtremalModel>& extremals,
                                            const SearchOptions& opts)
{
    DeterminismIndex index(h, extremals);
    const int F = h.num_edges();
    BudgetCounter budget(opts.budget, "irrMISC enumeration");
    std::vector<ContextSet> found;
    std::vector<DeterminismIndex::Bits> found_bits;

    for (int size = 1; size <= F; ++size) {
        std::vector<DeterminismIndex::Bits> this_round;
        ContextSet c;
        std::function<void(int)> rec = [&](int start) {
            budget.tick();
            if (static_cast<int>(c.size()) == size) {
                auto b = index.to_bits(c);
                for (const auto& f : found_bits)
                    if (f.is_subset_of(b)) return;
                if (index.is_misc(c)) {
                    found.push_back(c);
                    this_round.push_back(std::move(b));
                }
                return;
            }
            for (int f = start; f <= F - (size - static_cast<int>(c.size())); ++f) {
                c.push_back(f);
                rec(f + 1);
                c.pop_back();
            }
        };
        rec(0);
        found_bits.insert(found_bits.end(), this_round.begin(), this_round.end());
    }
    return found;
}

std::vector<ContextSet> enumerate_irr_miscs(const Scenario& h, const SearchOptions& opts)
{
    return enumerate_irr_miscs(h, extremal_models(h, ExtremalMethod::automatic, opts), opts);
}

std::vector<ContextSet> irr_miscs_kmn(int m, int n, const SearchOptions& opts)
{
    if (m < 1 || n < 1 || (m * n) % 2 == 0 || m * n == 1) throw InvalidArgument("need mn > 1 and odd");
    std::vector<ContextSet> out;
    if (m == 1 || n == 1) {
        const int total = m * n, size = total - 2;
        std::vector<char> pick(static_cast<std::size_t>(total), 0);
        std::fill(pick.begin(), pick.begin() + size, 1);
        do {
            ContextSet c;
            for (int i = 0; i < total; ++i)
                if (pick[static_cast<std::size_t>(i)]) c.push_back(i);
            out.push_back(std::move(c));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return out;
    }
    for (auto& cover : enumerate_minimal_edge_covers(make_complete_bipartite(m, n), opts)) out.push_back(std::move(cover));
    std::stable_sort(out.begin(), out.end(), [](const ContextSet& a, const ContextSet& b) { return a.size() < b.size(); });
    return out;
}

int sufficient_misc(const Scenario& h, const std::vector<ExtremalModel>& extremals)
{
    const int k = smallest_indeterministic_size(h, extremals);
    const int n = h.num_edges();
    DeterminismIndex index(h, extremals);
    if (index.max_deterministic() != n - k) throw Error("internal: deterministic count disagrees with k");
    return n - k + 1;
}

} // namespace ksc
