#pragma once

#include "ksc/extremal.hpp"
#include "ksc/lp.hpp"
#include "ksc/misc.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ksc {

/// Probability distribution over contexts.
struct QDist {
    std::map<int, Rational> weights; ///< context -> q_i, zero entries allowed

    ContextSet support() const;
    static QDist uniform(const ContextSet& contexts);
};

/// Throws InvalidArgument unless q is nonnegative, sums to 1 and indexes valid contexts.
void validate_q(const Scenario& h, const QDist& q);

/// Largest node value inside context f.
Rational zeta(const Scenario& h, const ProbModel& p, int f);
Rational zeta(const Scenario& h, const ExtremalModel& m, int f);

/// max over extremal models of sum_i q_i zeta_i. Throws UndefinedBeta when some
/// extremal model is fully deterministic (the scenario is KS-colourable).
Rational beta(const Scenario& h, const QDist& q, const std::vector<ExtremalModel>& extremals);

enum class Derivation { exact_max, closed_form_misc };

std::string to_string(Derivation d);

struct ClosedForm {
    int k = 0;          ///< smallest indeterministic size
    Rational p_max;
    int c = 0;          ///< number of contexts, n - k + 1
    Rational bound;     ///< 1 - (1 - p_max) / c
};

struct Inequality {
    ContextSet contexts;
    QDist q;
    Rational beta;
    Derivation derivation = Derivation::exact_max;
    std::optional<ClosedForm> closed_form;
    std::string expression; ///< human-readable "Corr_q <= ..." text
};

/// Requires support(q) == c. Beta is always the exact maximum; when q is
/// uniform on a MISC of size n - k + 1 the closed-form bound is attached and
/// checked to dominate beta.
Inequality make_inequality(const Scenario& h, const ContextSet& c, const QDist& q,
                           const std::vector<ExtremalModel>& extremals);

/// joint[x][y] = p(m = x, s = y | M_i, S_i).
struct ContextData {
    int index = 0;
    Matrix joint;
};

struct DataTable {
    std::vector<ContextData> contexts;

    const ContextData* find(int index) const;
};

/// Throws InvalidArgument on non-square tables, entries outside [0,1] or a total other than 1.
void validate_data(const DataTable& data);

/// Column sums: p(s_i = y | S_i).
Vector source_marginal(const ContextData& c);

Rational corr(const DataTable& data, const QDist& q);

struct EvaluationReport {
    Rational corr;
    Rational beta;
    bool violated = false;
    Rational margin; ///< corr - beta
};

EvaluationReport evaluate(const DataTable& data, const Inequality& ineq);

/// (1 - epsilon) * perfectly correlated + epsilon * uniform, d = |f_i| per context.
DataTable synthetic_data(const Scenario& h, const ContextSet& contexts, const Rational& epsilon);

enum class NcFailure { lambda_intersection_empty, phen_constraint_infeasible };

std::string to_string(NcFailure f);

/// Outcome of the saturating noncontextual model construction. Ontic states are
/// indices into the extremal list passed in.
struct NCModelAttempt {
    Rational beta;
    std::vector<int> lambda_max;              ///< states attaining beta
    std::vector<int> lambda_detp;             ///< states of lambda_max whose retrodictions have nonzero marginal
    std::map<std::pair<int, int>, int> mu_retro; ///< (state, context) -> retrodicted outcome
    std::vector<std::pair<int, int>> ties;    ///< (state, context) pairs where the argmax was not unique
    std::map<std::tuple<int, int, int>, Rational> response; ///< (state, context, outcome) -> xi
    std::map<int, Rational> nu;               ///< weights over lambda_detp when feasible
    bool feasible = false;
    std::optional<NcFailure> failure_reason;
    LinearProgram lp;                         ///< the phenomenological system, for audit
    std::vector<int> lp_states;               ///< state per LP column
    std::optional<Vector> farkas;             ///< infeasibility certificate for lp
    std::optional<DataTable> reconstructed;   ///< p(m,s|M,S) rebuilt from the model
};

/// Source marginals default to uniform over each context's outcomes.
NCModelAttempt build_saturating_nc_model(const Scenario& h, const QDist& q,
                                         const std::map<int, Vector>& source_marginals,
                                         const std::vector<ExtremalModel>& extremals);

} // namespace ksc
