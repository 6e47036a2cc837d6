#pragma once

#include <string>

#include "json.hpp"
#include "posetreal/aut.hpp"
#include "posetreal/beta.hpp"
#include "posetreal/construct.hpp"
#include "posetreal/poset.hpp"

namespace posetreal {

// Poset JSON: {"points": [label,...], "covers": [[i,j],...]}; a label is a
// plain string or [tag, level]. Graph JSON: {"n": int, "edges": [[u,v],...]}.

nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json action_to_json(const std::vector<Perm>& action);
std::vector<Perm> action_from_json(const nlohmann::json& j);

nlohmann::json permgroup_to_json(const PermGroup& pg);

// FNV-1a over the labelled closure matrix and labels.
std::string poset_hash(const Poset& p);

nlohmann::json certificate_to_json(const RealizationCertificate& cert, const Poset& p,
                                   bool verified);

nlohmann::json beta_result_to_json(const std::string& group_name, const BetaResult& r);

// Hasse diagram, ranked bottom-up by height.
std::string poset_to_dot(const Poset& p);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace posetreal
