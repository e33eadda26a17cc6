#pragma once

#include "ksc/colourability.hpp"
#include "ksc/extremal.hpp"
#include "ksc/misc.hpp"
#include "ksc/two_reg.hpp"
#include "ksc/witness.hpp"

#include <json.hpp>

#include <string>

namespace ksc {

using Json = nlohmann::ordered_json;

/// Reads a rational from "num/den", a decimal string, or a JSON number
/// (converted exactly through its shortest decimal form).
Rational rational_from_json(const Json& j);

/// Sets j[key] = "num/den" and j[key + "_decimal"] = approximate double.
void put_rational(Json& j, const std::string& key, const Rational& r);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Scenario& h);
/// Validates; throws InvalidArgument / EmptyHyperedge on bad input.
Scenario scenario_from_json(const Json& j);

Json to_json(const TwoRegScenario& h);

Json to_json(const ProbModel& p);
ProbModel model_from_json(const Json& j);

Json to_json(const ExtremalModel& m);
Json to_json(const ColourabilityVerdict& v);
Json to_json(const ParityCertificate& c);
Json to_json(const MiscReport& r);

Json to_json(const QDist& q);
QDist qdist_from_json(const Json& j);

Json to_json(const DataTable& t);
DataTable data_from_json(const Json& j);

Json to_json(const Inequality& ineq);
/// Reads back contexts, q and beta; derivation metadata is informational.
Inequality inequality_from_json(const Json& j);

Json to_json(const EvaluationReport& r);
Json to_json(const NCModelAttempt& a);

/// Edge labels are edge indices.
std::string to_dot(const Graph& g);

enum class HyperedgeStyle { clique, star };

/// Clique style joins every pair of nodes in a context with an edge labelled by
/// the context; star style adds one box per context joined to its nodes.
std::string to_dot(const Scenario& h, HyperedgeStyle style);

} // namespace ksc
