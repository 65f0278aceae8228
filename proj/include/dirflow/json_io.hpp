#pragma once

#include <string>

#include <json.hpp>

#include "dirflow/classify.hpp"
#include "dirflow/distances.hpp"
#include "dirflow/geometry.hpp"
#include "dirflow/network.hpp"
#include "dirflow/solvers.hpp"

namespace dirflow {

using nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json distance_to_json(const DirectedDistance& d);
DirectedDistance distance_from_json(const json& j);

json network_to_json(const Network& net);
Network network_from_json(const json& j);

json point_to_json(const LabeledPoint& p);
LabeledPoint point_from_json(const json& j, const std::vector<std::string>& base);

json realization_to_json(const OrientedTreeRealization& real);
OrientedTreeRealization realization_from_json(const json& j);

json decomposition_to_json(const LaminarDecomposition& dec,
                           const std::vector<std::string>& ground);
LaminarDecomposition decomposition_from_json(const json& j,
                                             const std::vector<std::string>& ground);

json multiflow_to_json(const Multiflow& f, const Network& net);
Multiflow multiflow_from_json(const json& j, const Network& net);

json report_to_json(const SolveReport& rep, const Network& net);

std::string network_to_dot(const Network& net);
std::string tree_to_dot(const OrientedTreeRealization& real);
std::string tightness_to_dot(const TightnessGraph& k,
                             const std::vector<std::string>& base);

}  // namespace dirflow
