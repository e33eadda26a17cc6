#pragma once

#include "ksc/scenario.hpp"
#include "ksc/two_reg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ksc {

enum class VerdictMethod { parity_2regular, parity_general, exhaustive };

std::string to_string(VerdictMethod m);

struct ColourabilityVerdict {
    bool colourable = false;
    std::optional<ProbModel> witness; ///< {0,1} model when colourable
    VerdictMethod method = VerdictMethod::exhaustive;
    std::string justification;
};

/// Complete exact-hitting search: most constrained context first, branching on
/// its open nodes in ascending order, zeroing every co-context node of a chosen 1.
/// Throws BudgetExceeded rather than guessing.
std::optional<ProbModel> find_ks_colouring(const Scenario& h, const SearchOptions& opts = {});

/// Decides 2Reg(G) from G alone: uncolourable iff some connected component of G
/// has an odd number of edges. Even case carries an explicit witness built from a
/// pairing of adjacent edges. Throws InvalidArgument if the scenario is not 2-regular.
ColourabilityVerdict parity_verdict_2regular(const TwoRegScenario& h);

enum class ParityCase { all_even_degrees, odd_degree_tiling, mod2_combination };

std::string to_string(ParityCase c);

/// A set T of contexts of odd size in which every node occurs an even number
/// of times. Summing the normalisation equations over T then reads
/// "even = odd" for any {0,1} model.
struct ParityCertificate {
    ParityCase kind = ParityCase::mod2_combination;
    std::vector<int> contexts;
    std::string justification;
};

/// Sound, incomplete: nullopt means inconclusive.
std::optional<ParityCertificate> parity_witness_general(const Scenario& h);

/// Independent check of a certificate's defining property.
bool certificate_holds(const Scenario& h, const ParityCertificate& c);

/// Parity arguments first, exhaustive search as fallback.
ColourabilityVerdict verdict(const Scenario& h, const SearchOptions& opts = {});
ColourabilityVerdict verdict(const TwoRegScenario& h);

/// Dual multigraph components of a 2-regular scenario (contexts as vertices,
/// nodes as edges). Returns the context-component id per context.
std::vector<int> dual_components(const Scenario& h);

} // namespace ksc
