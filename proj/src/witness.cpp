#include "ksc/witness.hpp"

#include <algorithm>

namespace ksc {

ContextSet QDist::support() const
{
    ContextSet out;
    for (const auto& [i, w] : weights)
        if (w != 0) out.push_back(i);
    return out;
}

QDist QDist::uniform(const ContextSet& contexts)
{
    if (contexts.empty()) throw InvalidArgument("uniform distribution over no contexts");
    QDist q;
    Rational w(1, static_cast<long>(contexts.size()));
    for (int i : contexts) q.weights[i] = w;
    return q;
}

void validate_q(const Scenario& h, const QDist& q)
{
    Rational total = 0;
    for (const auto& [i, w] : q.weights) {
        if (i < 0 || i >= h.num_edges()) throw InvalidArgument("q names context " + std::to_string(i) + " out of range");
        if (w < 0) throw InvalidArgument("q has a negative weight");
        total += w;
    }
    if (total != 1) throw InvalidArgument("q sums to " + to_string(total) + ", not 1");
}

Rational zeta(const Scenario& h, const ProbModel& p, int f)
{
    Rational best = 0;
    for (int w : h.hyperedge(f)) best = std::max(best, p.probabilities.at(static_cast<std::size_t>(w)));
    return best;
}

Rational zeta(const Scenario& h, const ExtremalModel& m, int f)
{
    return zeta(h, m.model, f);
}

namespace {

Rational weighted_zeta(const Scenario& h, const QDist& q, const ProbModel& p)
{
    Rational s = 0;
    for (const auto& [i, w] : q.weights)
        if (w != 0) s += w * zeta(h, p, i);
    return s;
}

void require_uncolourable(const Scenario& h, const std::vector<ExtremalModel>& extremals)
{
    if (extremals.empty()) throw InvalidArgument("no extremal models given");
    for (const auto& e : extremals)
        if (static_cast<int>(deterministic_contexts(h, e.model).size()) == h.num_edges())
            throw UndefinedBeta("scenario is KS-colourable; beta is undefined");
}

} // namespace

Rational beta(const Scenario& h, const QDist& q, const std::vector<ExtremalModel>& extremals)
{
    validate_q(h, q);
    require_uncolourable(h, extremals);
    Rational best = 0;
    for (const auto& e : extremals) best = std::max(best, weighted_zeta(h, q, e.model));
    return best;
}

std::string to_string(Derivation d)
{
    return d == Derivation::exact_max ? "exact-max" : "closed-form-misc";
}

Inequality make_inequality(const Scenario& h, const ContextSet& c, const QDist& q,
                           const std::vector<ExtremalModel>& extremals)
{
    validate_q(h, q);
    if (q.support() != c) throw InvalidArgument("q must be supported exactly on the context set");
    Inequality ineq;
    ineq.contexts = c;
    ineq.q = q;
    ineq.beta = beta(h, q, extremals);

    const int n = h.num_edges();
    const int k = smallest_indeterministic_size(h, extremals);
    bool uniform = std::all_of(q.weights.begin(), q.weights.end(),
                               [&](const auto& kv) { return kv.second == 0 || kv.second == q.weights.at(c.front()); });
    if (uniform && static_cast<int>(c.size()) == n - k + 1) {
        MiscReport rep = is_misc(h, c, extremals);
        if (rep.is_misc && rep.p_max) {
            ClosedForm cf;
            cf.k = k;
            cf.p_max = *rep.p_max;
            cf.c = n - k + 1;
            cf.bound = 1 - (1 - cf.p_max) / Rational(cf.c);
            if (ineq.beta <= cf.bound) {
                ineq.closed_form = cf;
                ineq.derivation = Derivation::closed_form_misc;
            } else if (h.is_two_regular()) {
                throw Error("internal: exact beta exceeds the closed-form bound");
            }
        }
    }

    std::string lhs = "Corr_q = ";
    bool first = true;
    for (const auto& [i, w] : q.weights) {
        if (w == 0) continue;
        lhs += (first ? "" : " + ") + to_string(w) + "*C" + std::to_string(i);
        first = false;
    }
    ineq.expression = lhs + " <= " + to_string(ineq.beta);
    if (ineq.closed_form)
        ineq.expression += "  (closed form 1 - (1 - " + to_string(ineq.closed_form->p_max) + ")/" +
                           std::to_string(ineq.closed_form->c) + " = " + to_string(ineq.closed_form->bound) + ")";
    return ineq;
}

const ContextData* DataTable::find(int index) const
{
    for (const auto& c : contexts)
        if (c.index == index) return &c;
    return nullptr;
}

void validate_data(const DataTable& data)
{
    for (const auto& c : data.contexts) {
        const std::string where = "context " + std::to_string(c.index);
        if (c.joint.empty()) throw InvalidArgument(where + ": empty table");
        Rational total = 0;
        for (const auto& row : c.joint) {
            if (row.size() != c.joint.size()) throw InvalidArgument(where + ": table is not square");
            for (const auto& x : row) {
                if (x < 0 || x > 1) throw InvalidArgument(where + ": entry outside [0,1]");
                total += x;
            }
        }
        if (total != 1) throw InvalidArgument(where + ": entries sum to " + to_string(total));
    }
}

Vector source_marginal(const ContextData& c)
{
    Vector m(c.joint.size(), Rational(0));
    for (const auto& row : c.joint)
        for (std::size_t y = 0; y < row.size(); ++y) m[y] += row[y];
    return m;
}

Rational corr(const DataTable& data, const QDist& q)
{
    Rational s = 0;
    for (const auto& [i, w] : q.weights) {
        if (w == 0) continue;
        const ContextData* c = data.find(i);
        if (!c) throw InvalidArgument("data table has no entry for context " + std::to_string(i));
        Rational diag = 0;
        for (std::size_t x = 0; x < c->joint.size(); ++x) diag += c->joint[x].at(x);
        s += w * diag;
    }
    return s;
}

EvaluationReport evaluate(const DataTable& data, const Inequality& ineq)
{
    EvaluationReport r;
    r.corr = corr(data, ineq.q);
    r.beta = ineq.beta;
    r.margin = r.corr - r.beta;
    r.violated = r.corr > r.beta;
    return r;
}

DataTable synthetic_data(const Scenario& h, const ContextSet& contexts, const Rational& epsilon)
{
    if (epsilon < 0 || epsilon > 1) throw InvalidArgument("noise level must lie in [0,1]");
    DataTable t;
    for (int i : contexts) {
        const auto d = h.hyperedge(i).size();
        ContextData c;
        c.index = i;
        Rational dd(static_cast<long>(d));
        c.joint.assign(d, Vector(d, epsilon / (dd * dd)));
        for (std::size_t x = 0; x < d; ++x) c.joint[x][x] += (1 - epsilon) / dd;
        t.contexts.push_back(std::move(c));
    }
    return t;
}

std::string to_string(NcFailure f)
{
    return f == NcFailure::lambda_intersection_empty ? "lambda-intersection-empty" : "phen-constraint-infeasible";
}

NCModelAttempt build_saturating_nc_model(const Scenario& h, const QDist& q,
                                         const std::map<int, Vector>& source_marginals,
                                         const std::vector<ExtremalModel>& extremals)
{
    NCModelAttempt att;
    att.beta = beta(h, q, extremals);
    const ContextSet supp = q.support();

    std::map<int, Vector> marg;
    for (int i : supp) {
        const auto d = h.hyperedge(i).size();
        auto it = source_marginals.find(i);
        if (it == source_marginals.end()) {
            marg[i] = Vector(d, Rational(1, static_cast<long>(d)));
            continue;
        }
        if (it->second.size() != d) throw InvalidArgument("source marginal for context " + std::to_string(i) + " has wrong length");
        Rational total = 0;
        for (const auto& x : it->second) {
            if (x < 0) throw InvalidArgument("negative source marginal");
            total += x;
        }
        if (total != 1) throw InvalidArgument("source marginal for context " + std::to_string(i) + " does not sum to 1");
        marg[i] = it->second;
    }

    for (std::size_t l = 0; l < extremals.size(); ++l)
        if (weighted_zeta(h, q, extremals[l].model) == att.beta) att.lambda_max.push_back(static_cast<int>(l));

    for (int l : att.lambda_max) {
        const auto& p = extremals[static_cast<std::size_t>(l)].model;
        bool retrodiction_possible = true;
        for (int i : supp) {
            const auto& f = h.hyperedge(i);
            Rational z = zeta(h, p, i);
            int y = -1, attaining = 0;
            for (std::size_t x = 0; x < f.size(); ++x) {
                const auto& v = p.probabilities[static_cast<std::size_t>(f[x])];
                att.response[{l, i, static_cast<int>(x)}] = v;
                if (v == z) {
                    ++attaining;
                    if (y < 0) y = static_cast<int>(x);
                }
            }
            att.mu_retro[{l, i}] = y;
            if (attaining > 1) att.ties.emplace_back(l, i);
            if (marg[i][static_cast<std::size_t>(y)] == 0) retrodiction_possible = false;
        }
        if (retrodiction_possible) att.lambda_detp.push_back(l);
    }
    if (att.lambda_detp.empty()) {
        att.failure_reason = NcFailure::lambda_intersection_empty;
        return att;
    }

    // Columns: states in lambda_detp. Rows: normalisation, then one per (context, outcome).
    att.lp_states = att.lambda_detp;
    const std::size_t cols = att.lp_states.size();
    att.lp.a.push_back(Vector(cols, Rational(1)));
    att.lp.b.emplace_back(1);
    for (int i : supp) {
        for (std::size_t y = 0; y < marg[i].size(); ++y) {
            Vector row(cols, Rational(0));
            for (std::size_t j = 0; j < cols; ++j)
                if (att.mu_retro.at({att.lp_states[j], i}) == static_cast<int>(y)) row[j] = 1;
            att.lp.a.push_back(std::move(row));
            att.lp.b.push_back(marg[i][y]);
        }
    }
    att.lp.c.assign(cols, Rational(0));
    LpResult res = solve_lp(att.lp);
    if (res.status != LpStatus::optimal) {
        att.failure_reason = NcFailure::phen_constraint_infeasible;
        att.farkas = res.farkas;
        return att;
    }
    att.feasible = true;
    for (std::size_t j = 0; j < cols; ++j)
        if (res.x[j] != 0) att.nu[att.lp_states[j]] = res.x[j];

    DataTable t;
    for (int i : supp) {
        const auto d = h.hyperedge(i).size();
        ContextData c;
        c.index = i;
        c.joint.assign(d, Vector(d, Rational(0)));
        for (const auto& [l, weight] : att.nu) {
            auto y = static_cast<std::size_t>(att.mu_retro.at({l, i}));
            for (std::size_t x = 0; x < d; ++x) c.joint[x][y] += att.response.at({l, i, static_cast<int>(x)}) * weight;
        }
        t.contexts.push_back(std::move(c));
    }
    att.reconstructed = std::move(t);
    return att;
}

} // namespace ksc
