#pragma once

#include "ksc/extremal.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <vector>

namespace ksc {

/// Sorted list of context (hyperedge) indices.
using ContextSet = std::vector<int>;

struct MiscReport {
    bool is_misc = false;
    bool is_irr = false;
    std::optional<ExtremalModel> counterexample; ///< a model deterministic on every context of the set
    std::optional<ContextSet> reducing_subset;   ///< a proper subset that is already a MISC
    /// Largest zeta of the single indeterministic context over models that make
    /// all other contexts of the set deterministic. When no model does, 1/2 on
    /// 2-regular scenarios and nullopt otherwise.
    std::optional<Rational> p_max;
};

/// Deterministic-context sets of a complete extremal list, reduced to the
/// inclusion-maximal ones; answers MISC queries by subset tests.
class DeterminismIndex {
public:
    using Bits = boost::dynamic_bitset<>;

    DeterminismIndex(const Scenario& h, const std::vector<ExtremalModel>& extremals);

    bool is_misc(const ContextSet& c) const;
    int num_contexts() const { return num_contexts_; }
    const std::vector<Bits>& maximal_sets() const { return maximal_; }
    /// Largest number of contexts any extremal model makes deterministic.
    int max_deterministic() const { return max_det_; }

    Bits to_bits(const ContextSet& c) const;

private:
    int num_contexts_;
    std::vector<Bits> maximal_;
    int max_det_ = 0;
};

/// Throws InvalidArgument on an empty or out-of-range context set.
MiscReport is_misc(const Scenario& h, const ContextSet& c, const std::vector<ExtremalModel>& extremals);
MiscReport is_irr_misc(const Scenario& h, const ContextSet& c, const std::vector<ExtremalModel>& extremals);

/// All irreducible MISCs, by size then lexicographically.
std::vector<ContextSet> enumerate_irr_miscs(const Scenario& h, const std::vector<ExtremalModel>& extremals,
                                            const SearchOptions& opts = {});
std::vector<ContextSet> enumerate_irr_miscs(const Scenario& h, const SearchOptions& opts = {});

/// Edge-cover characterisation for 2Reg(K_{m,n}); context i is source edge i.
std::vector<ContextSet> irr_miscs_kmn(int m, int n, const SearchOptions& opts = {});

/// n - k + 1 with k the smallest indeterministic size; every context set of this
/// size is a MISC. Throws InvalidArgument for colourable scenarios.
int sufficient_misc(const Scenario& h, const std::vector<ExtremalModel>& extremals);

} // namespace ksc
