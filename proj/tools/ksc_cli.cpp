// ksc: command-line front end over the library. Dispatch, file I/O and exit codes only.

#include "ksc/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ksc;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;
constexpr int exit_violation = 10;

struct Globals {
    std::uint64_t budget = SearchOptions{}.budget;
    bool parallel = false;
    std::string output;

    SearchOptions options() const { return SearchOptions{budget, parallel}; }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path)
{
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

void emit(const Globals& g, const std::string& text)
{
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out) throw InvalidArgument("cannot write '" + g.output + "'");
    out << text;
}

void emit(const Globals& g, const Json& j)
{
    emit(g, j.dump(2) + "\n");
}

// Plain edge lists: first token is the vertex count, then pairs "u v".
Graph graph_from_text(const std::string& text)
{
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n)) throw InvalidArgument("edge list: missing vertex count");
    std::vector<Edge> edges;
    int u = 0, v = 0;
    while (in >> u >> v) edges.emplace_back(u, v);
    if (!in.eof()) throw InvalidArgument("edge list: malformed pair");
    return Graph(n, std::move(edges));
}

Graph load_graph(const std::string& path)
{
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return graph_from_json(Json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidArgument(path + ": " + e.what());
        }
    }
    return graph_from_text(text);
}

// A scenario file, or a graph file mapped through 2Reg.
struct Loaded {
    Scenario scenario;
    std::optional<TwoRegScenario> two_reg;
};

Loaded load_scenario(const std::string& path)
{
    Json j = read_json(path);
    if (j.contains("hyperedges")) return {scenario_from_json(j), std::nullopt};
    if (j.contains("edges")) {
        auto tr = two_reg(graph_from_json(j));
        return {tr.scenario, tr};
    }
    throw InvalidArgument(path + ": neither a scenario (hyperedges) nor a graph (edges)");
}

ContextSet parse_contexts(const std::string& text, const Scenario& h)
{
    ContextSet c;
    if (text == "all") {
        for (int i = 0; i < h.num_edges(); ++i) c.push_back(i);
        return c;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw InvalidArgument("bad context index '" + tok + "'");
        c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InvalidArgument("repeated context index");
    for (int i : c)
        if (i < 0 || i >= h.num_edges()) throw InvalidArgument("context index " + std::to_string(i) + " out of range");
    if (c.empty()) throw InvalidArgument("empty context list");
    return c;
}

QDist load_q(const std::string& spec, const ContextSet& contexts)
{
    if (spec == "uniform") return QDist::uniform(contexts);
    return qdist_from_json(read_json(spec));
}

std::vector<ExtremalModel> extremals_for(const Loaded& l, const SearchOptions& opts)
{
    if (l.two_reg) return enumerate_extremal_models_2reg(*l.two_reg, opts);
    return extremal_models(l.scenario, ExtremalMethod::automatic, opts);
}

Json rational_json(const std::string& key, const Rational& r)
{
    Json j;
    put_rational(j, key, r);
    return j;
}

template <class F>
auto stage(const std::string& name, F&& f)
{
    try {
        return f();
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(name + ": " + e.what());
    } catch (const UndefinedBeta& e) {
        throw UndefinedBeta(name + ": " + e.what());
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(name + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kochen-Specker contextuality scenarios from graphs: colourability, extremal models, MISCs and noise-robust inequalities"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget", g.budget, "Expansion cap for exhaustive searches")->check(CLI::PositiveNumber);
    app.add_flag("--parallel", g.parallel, "Parallel enumeration where supported");
    app.add_option("-o,--output", g.output, "Write to this file instead of stdout");

    int code = exit_ok;
    std::function<void()> run;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    std::string kind;
    std::vector<std::string> params;
    gen->add_option("kind", kind, "complete-bipartite | cycle | complete | claw | from-file")
        ->required()
        ->check(CLI::IsMember({"complete-bipartite", "cycle", "complete", "claw", "from-file"}));
    gen->add_option("params", params, "m n | n | n | (none) | path");
    gen->callback([&] {
        run = [&] {
            auto need = [&](std::size_t k) {
                if (params.size() != k) throw InvalidArgument(kind + " expects " + std::to_string(k) + " parameter(s)");
            };
            auto num = [&](std::size_t i) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(params[i], &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != params[i].size()) throw InvalidArgument("bad number '" + params[i] + "'");
                return v;
            };
            Graph out;
            if (kind == "complete-bipartite") {
                need(2);
                out = make_complete_bipartite(num(0), num(1));
            } else if (kind == "cycle") {
                need(1);
                out = make_cycle(num(0));
            } else if (kind == "complete") {
                need(1);
                out = make_complete(num(0));
            } else if (kind == "claw") {
                need(0);
                out = make_claw();
            } else {
                need(1);
                out = load_graph(params[0]);
            }
            emit(g, to_json(out));
        };
    });

    // two-reg
    auto* tworeg = app.add_subcommand("two-reg", "Map a graph to its 2Reg scenario");
    std::string graph_path;
    bool via_line_graph = false;
    tworeg->add_option("graph", graph_path)->required();
    tworeg->add_flag("--matching", via_line_graph, "Build Mat(L(G)) instead");
    tworeg->callback([&] {
        run = [&] {
            Graph gr = load_graph(graph_path);
            emit(g, via_line_graph ? to_json(matching_scenario(gr)) : to_json(two_reg(gr)));
        };
    });

    std::string input;
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Scenario or graph JSON")->required(); };

    // check-ks
    auto* check = app.add_subcommand("check-ks", "Decide KS-colourability");
    add_input(check);
    std::string check_method = "auto";
    check->add_option("--method", check_method)->check(CLI::IsMember({"auto", "parity", "exhaustive"}));
    check->callback([&] {
        run = [&] {
            Loaded l = load_scenario(input);
            Json out;
            if (check_method == "auto") {
                out = l.two_reg ? to_json(verdict(*l.two_reg)) : to_json(verdict(l.scenario, g.options()));
            } else if (check_method == "parity") {
                if (l.two_reg) {
                    out = to_json(parity_verdict_2regular(*l.two_reg));
                } else {
                    auto cert = parity_witness_general(l.scenario);
                    out["conclusive"] = cert.has_value();
                    if (cert) {
                        out["colourable"] = false;
                        out["certificate"] = to_json(*cert);
                    }
                }
            } else {
                auto w = find_ks_colouring(l.scenario, g.options());
                out["colourable"] = w.has_value();
                out["method"] = to_string(VerdictMethod::exhaustive);
                if (w) out["witness"] = to_json(*w);
            }
            emit(g, out);
        };
    });

    // extremals
    auto* ext = app.add_subcommand("extremals", "Enumerate extremal probabilistic models");
    add_input(ext);
    std::string ext_method = "auto";
    ext->add_option("--method", ext_method)->check(CLI::IsMember({"auto", "general", "structural"}));
    ext->callback([&] {
        run = [&] {
            Loaded l = load_scenario(input);
            ExtremalMethod m = ext_method == "general"      ? ExtremalMethod::general
                               : ext_method == "structural" ? ExtremalMethod::structural
                                                            : ExtremalMethod::automatic;
            auto ms = extremal_models(l.scenario, m, g.options());
            Json list = Json::array();
            for (const auto& e : ms) list.push_back(to_json(e));
            emit(g, Json{{"count", ms.size()}, {"models", list}});
        };
    });

    // miscs
    auto* miscs = app.add_subcommand("miscs", "Enumerate irreducible MISCs, or test one context set");
    add_input(miscs);
    std::string misc_check;
    bool irr_only = false;
    miscs->add_option("--check", misc_check, "Comma-separated context indices to test");
    miscs->add_flag("--irr", irr_only, "With --check: also test irreducibility");
    miscs->callback([&] {
        run = [&] {
            Loaded l = load_scenario(input);
            auto ms = extremals_for(l, g.options());
            if (!misc_check.empty()) {
                ContextSet c = parse_contexts(misc_check, l.scenario);
                emit(g, to_json(irr_only ? is_irr_misc(l.scenario, c, ms) : is_misc(l.scenario, c, ms)));
                return;
            }
            auto found = enumerate_irr_miscs(l.scenario, ms, g.options());
            emit(g, Json{{"count", found.size()}, {"irr_miscs", found}});
        };
    });

    // beta / ineq / ncmodel share contexts + q
    std::string contexts_text = "all", q_spec = "uniform";
    auto add_q = [&](CLI::App* sub) {
        sub->add_option("--contexts", contexts_text, "Comma-separated context indices, or 'all'");
        sub->add_option("--q", q_spec, "'uniform' or a QDist JSON file");
    };

    auto* beta_cmd = app.add_subcommand("beta", "Weighted max-predictability");
    add_input(beta_cmd);
    add_q(beta_cmd);
    beta_cmd->callback([&] {
        run = [&] {
            Loaded l = load_scenario(input);
            QDist q = load_q(q_spec, parse_contexts(contexts_text, l.scenario));
            validate_q(l.scenario, q);
            Json out = rational_json("beta", beta(l.scenario, q, extremals_for(l, g.options())));
            out["q"] = to_json(q)["weights"];
            emit(g, out);
        };
    });

    auto* ineq_cmd = app.add_subcommand("ineq", "Emit a noncontextuality inequality");
    add_input(ineq_cmd);
    add_q(ineq_cmd);
    ineq_cmd->callback([&] {
        run = [&] {
            Loaded l = load_scenario(input);
            ContextSet c = parse_contexts(contexts_text, l.scenario);
            QDist q = load_q(q_spec, c);
            emit(g, to_json(make_inequality(l.scenario, c, q, extremals_for(l, g.options()))));
        };
    });

    // corr
    auto* corr_cmd = app.add_subcommand("corr", "Source-measurement correlation of a data table");
    std::string data_path, corr_q = "uniform";
    corr_cmd->add_option("data", data_path)->required();
    corr_cmd->add_option("--q", corr_q, "'uniform' over the table's contexts, or a QDist JSON file");
    corr_cmd->callback([&] {
        run = [&] {
            DataTable t = data_from_json(read_json(data_path));
            ContextSet c;
            for (const auto& x : t.contexts) c.push_back(x.index);
            std::sort(c.begin(), c.end());
            emit(g, rational_json("corr", corr(t, load_q(corr_q, c))));
        };
    });

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "Test data against an inequality; exit 10 on violation");
    std::string ineq_path;
    eval->add_option("data", data_path)->required();
    eval->add_option("inequality", ineq_path)->required();
    eval->callback([&] {
        run = [&] {
            DataTable t = data_from_json(read_json(data_path));
            auto r = evaluate(t, inequality_from_json(read_json(ineq_path)));
            emit(g, to_json(r));
            if (r.violated) code = exit_violation;
        };
    });

    // ncmodel
    auto* nc = app.add_subcommand("ncmodel", "Attempt the saturating noncontextual model construction");
    add_input(nc);
    add_q(nc);
    std::string marginals_path;
    nc->add_option("--marginals", marginals_path, "JSON {\"<ctx>\": [\"p0\", ...]}; default uniform");
    nc->callback([&] {
        run = [&] {
            Loaded l = load_scenario(input);
            QDist q = load_q(q_spec, parse_contexts(contexts_text, l.scenario));
            validate_q(l.scenario, q);
            std::map<int, Vector> marg;
            if (!marginals_path.empty()) {
                const Json given = read_json(marginals_path);
                for (const auto& [key, arr] : given.items()) {
                    Vector v;
                    for (const auto& x : arr) v.push_back(rational_from_json(x));
                    std::size_t used = 0;
                    int idx = 0;
                    try {
                        idx = std::stoi(key, &used);
                    } catch (const std::exception&) {
                        used = 0;
                    }
                    if (used == 0 || used != key.size()) throw InvalidArgument("marginals: bad context key '" + key + "'");
                    marg[idx] = std::move(v);
                }
            }
            emit(g, to_json(build_saturating_nc_model(l.scenario, q, marg, extremals_for(l, g.options()))));
        };
    });

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "Graphviz export of a graph or scenario");
    add_input(dot);
    std::string style = "clique";
    bool as_scenario = false;
    dot->add_option("--style", style, "Hyperedge drawing for scenarios")->check(CLI::IsMember({"clique", "star"}));
    dot->add_flag("--two-reg", as_scenario, "Draw 2Reg of a graph input instead of the graph");
    dot->callback([&] {
        run = [&] {
            Json j = read_json(input);
            HyperedgeStyle s = style == "star" ? HyperedgeStyle::star : HyperedgeStyle::clique;
            if (j.contains("hyperedges"))
                emit(g, to_dot(scenario_from_json(j), s));
            else if (as_scenario)
                emit(g, to_dot(two_reg(graph_from_json(j)).scenario, s));
            else
                emit(g, to_dot(graph_from_json(j)));
        };
    });

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "two-reg, check-ks, extremals, miscs and inequalities in one report");
    pipe->add_option("graph", graph_path)->required();
    pipe->callback([&] {
        run = [&] {
            const SearchOptions opts = g.options();
            Graph gr = stage("load", [&] { return load_graph(graph_path); });
            TwoRegScenario tr = stage("two-reg", [&] { return two_reg(gr); });
            ColourabilityVerdict v = stage("check-ks", [&] { return verdict(tr); });
            Json report;
            report["graph"] = to_json(gr);
            report["scenario"] = to_json(tr);
            report["verdict"] = to_json(v);
            auto ms = stage("extremals", [&] { return enumerate_extremal_models_2reg(tr, opts); });
            report["extremal_count"] = ms.size();
            Json list = Json::array();
            if (!v.colourable) {
                auto found = stage("miscs", [&] { return enumerate_irr_miscs(tr.scenario, ms, opts); });
                stage("inequalities", [&] {
                    for (const auto& c : found) {
                        Json item = to_json(make_inequality(tr.scenario, c, QDist::uniform(c), ms));
                        list.push_back(std::move(item));
                    }
                    return 0;
                });
            }
            report["irr_misc_count"] = list.size();
            report["inequalities"] = list;
            emit(g, report);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (run) run();
        return code;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const UndefinedBeta& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
}
