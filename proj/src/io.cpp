#include "ksc/io.hpp"

#include <sstream>

namespace ksc {

namespace {

template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string(what) + ": " + e.what());
    }
}

Json rational_list(const Vector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

} // namespace

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(Integer(j.get<unsigned long long>()));
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    throw InvalidArgument("expected a rational, got " + j.dump());
}

void put_rational(Json& j, const std::string& key, const Rational& r)
{
    j[key] = to_string(r);
    j[key + "_decimal"] = to_double(r);
}

Json to_json(const Graph& g)
{
    Json j;
    j["num_vertices"] = g.num_vertices();
    j["edges"] = Json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const Json& j)
{
    return guarded("graph", [&] {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidArgument("graph: each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(j.at("num_vertices").get<int>(), std::move(edges));
    });
}

Json to_json(const Scenario& h)
{
    Json j;
    j["num_nodes"] = h.num_nodes;
    j["node_labels"] = h.node_labels;
    j["hyperedges"] = h.hyperedges;
    return j;
}

Scenario scenario_from_json(const Json& j)
{
    Scenario h = guarded("scenario", [&] {
        Scenario s;
        s.num_nodes = j.at("num_nodes").get<int>();
        if (j.contains("node_labels"))
            s.node_labels = j.at("node_labels").get<std::vector<std::string>>();
        else
            for (int i = 0; i < s.num_nodes; ++i) s.node_labels.push_back("w" + std::to_string(i));
        s.hyperedges = j.at("hyperedges").get<std::vector<NodeSet>>();
        return s;
    });
    for (auto& f : h.hyperedges) std::sort(f.begin(), f.end());
    require_valid(h);
    return h;
}

Json to_json(const TwoRegScenario& h)
{
    Json j = to_json(h.scenario);
    j["node_origin"] = Json::array();
    for (const auto& [a, b] : h.node_origin) j["node_origin"].push_back({a, b});
    j["edge_origin"] = h.edge_origin;
    return j;
}

Json to_json(const ProbModel& p)
{
    Json j;
    j["probabilities"] = rational_list(p.probabilities);
    return j;
}

ProbModel model_from_json(const Json& j)
{
    return guarded("model", [&] {
        ProbModel p;
        for (const auto& x : j.at("probabilities")) p.probabilities.push_back(rational_from_json(x));
        return p;
    });
}

Json to_json(const ExtremalModel& m)
{
    Json j;
    j["support"] = m.support;
    j["probabilities"] = rational_list(m.model.probabilities);
    j["singleton_part"] = m.singleton_part;
    j["hypercycles"] = m.hypercycle_part;
    return j;
}

Json to_json(const ColourabilityVerdict& v)
{
    Json j;
    j["colourable"] = v.colourable;
    j["method"] = to_string(v.method);
    j["justification"] = v.justification;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

Json to_json(const ParityCertificate& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["contexts"] = c.contexts;
    j["justification"] = c.justification;
    return j;
}

Json to_json(const MiscReport& r)
{
    Json j;
    j["is_misc"] = r.is_misc;
    j["is_irr"] = r.is_irr;
    if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
    if (r.reducing_subset) j["reducing_subset"] = *r.reducing_subset;
    if (r.p_max) put_rational(j, "p_max", *r.p_max);
    return j;
}

Json to_json(const QDist& q)
{
    Json w = Json::object();
    for (const auto& [i, x] : q.weights) w[std::to_string(i)] = to_string(x);
    return Json{{"weights", w}};
}

QDist qdist_from_json(const Json& j)
{
    return guarded("q", [&] {
        QDist q;
        for (const auto& [key, val] : j.at("weights").items()) {
            std::size_t used = 0;
            int idx = 0;
            try {
                idx = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || key.empty()) throw InvalidArgument("q: context key '" + key + "' is not an integer");
            q.weights[idx] = rational_from_json(val);
        }
        return q;
    });
}

Json to_json(const DataTable& t)
{
    Json ctxs = Json::array();
    for (const auto& c : t.contexts) {
        Json rows = Json::array();
        for (const auto& r : c.joint) rows.push_back(rational_list(r));
        ctxs.push_back(Json{{"index", c.index}, {"joint", rows}});
    }
    return Json{{"contexts", ctxs}};
}

DataTable data_from_json(const Json& j)
{
    DataTable t = guarded("data", [&] {
        DataTable out;
        for (const auto& c : j.at("contexts")) {
            ContextData cd;
            cd.index = c.at("index").get<int>();
            for (const auto& row : c.at("joint")) {
                Vector r;
                for (const auto& x : row) r.push_back(rational_from_json(x));
                cd.joint.push_back(std::move(r));
            }
            out.contexts.push_back(std::move(cd));
        }
        return out;
    });
    validate_data(t);
    return t;
}

Json to_json(const Inequality& ineq)
{
    Json j;
    j["contexts"] = ineq.contexts;
    j["q"] = to_json(ineq.q)["weights"];
    put_rational(j, "beta", ineq.beta);
    Json d;
    d["tag"] = to_string(ineq.derivation);
    if (ineq.closed_form) {
        d["k"] = ineq.closed_form->k;
        put_rational(d, "p_max", ineq.closed_form->p_max);
        d["c"] = ineq.closed_form->c;
        put_rational(d, "bound", ineq.closed_form->bound);
    }
    j["derivation"] = d;
    j["assumed_source_equivalences"] = "the source preparations of all listed contexts are operationally equivalent";
    j["expression"] = ineq.expression;
    return j;
}

Inequality inequality_from_json(const Json& j)
{
    return guarded("inequality", [&] {
        Inequality ineq;
        ineq.contexts = j.at("contexts").get<ContextSet>();
        ineq.q = qdist_from_json(Json{{"weights", j.at("q")}});
        ineq.beta = rational_from_json(j.at("beta"));
        if (j.contains("derivation") && j["derivation"].value("tag", "") == "closed-form-misc")
            ineq.derivation = Derivation::closed_form_misc;
        ineq.expression = j.value("expression", "");
        return ineq;
    });
}

Json to_json(const EvaluationReport& r)
{
    Json j;
    put_rational(j, "corr", r.corr);
    put_rational(j, "beta", r.beta);
    j["violated"] = r.violated;
    put_rational(j, "margin", r.margin);
    return j;
}

Json to_json(const NCModelAttempt& a)
{
    Json j;
    j["feasible"] = a.feasible;
    if (a.failure_reason) j["failure_reason"] = to_string(*a.failure_reason);
    put_rational(j, "beta", a.beta);
    j["lambda_max"] = a.lambda_max;
    j["lambda_detp"] = a.lambda_detp;
    Json mu = Json::array();
    for (const auto& [key, y] : a.mu_retro) mu.push_back(Json{{"state", key.first}, {"context", key.second}, {"outcome", y}});
    j["mu_retro"] = mu;
    Json ties = Json::array();
    for (const auto& [l, i] : a.ties) ties.push_back({l, i});
    j["argmax_ties"] = ties;
    Json nu = Json::object();
    for (const auto& [l, w] : a.nu) nu[std::to_string(l)] = to_string(w);
    j["nu"] = nu;
    if (a.farkas) j["farkas"] = rational_list(*a.farkas);
    if (a.reconstructed) j["reconstructed"] = to_json(*a.reconstructed);
    return j;
}

std::string to_dot(const Graph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (int e = 0; e < g.num_edges(); ++e)
        os << "  v" << g.edge(e).first << " -- v" << g.edge(e).second << " [label=\"" << e << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Scenario& h, HyperedgeStyle style)
{
    std::ostringstream os;
    os << "graph H {\n";
    for (int w = 0; w < h.num_nodes; ++w)
        os << "  w" << w << " [label=\"" << h.node_labels.at(static_cast<std::size_t>(w)) << "\"];\n";
    for (int f = 0; f < h.num_edges(); ++f) {
        const auto& e = h.hyperedge(f);
        if (style == HyperedgeStyle::star) {
            os << "  f" << f << " [shape=box,label=\"f" << f << "\"];\n";
            for (int w : e) os << "  f" << f << " -- w" << w << ";\n";
        } else {
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b)
                    os << "  w" << e[a] << " -- w" << e[b] << " [label=\"f" << f << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace ksc
