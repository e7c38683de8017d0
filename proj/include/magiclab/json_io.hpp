#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "magiclab/cycles.hpp"
#include "magiclab/oracle.hpp"

namespace magiclab {

// JSON forms (shape violations throw SchemaError):
//   Digraph        {"n": 3, "arcs": [[1,2],[2,3],[3,1]]}
//   TotalLabeling  {"graph": <digraph>, "vertex_labels": {"1": 1, ...},
//                   "arc_labels": [[u, v, label], ...]}
//   SFamilyMember  {"p": 3, "k": 3, "digraph": <digraph>}
//   TFamilyMember  {"label_universe": 6, "vertex_set": [1,2,3],
//                   "sigma": 9, "arcs": [[a,b], ...]}
//   assignment     {"kind": "s"|"t", "constant": <member>} or
//                  {"kind": "s"|"t", "images": [<member>, ...]}
//                  (images parallel to the domain's arc order)

nlohmann::json json_of(const Digraph& d);
nlohmann::json json_of(const TotalLabeling& f);
nlohmann::json json_of(const SFamilyMember& m);
nlohmann::json json_of(const TFamilyMember& m);
nlohmann::json json_of(const ValenceReport& r);
nlohmann::json json_of(const LabeledProduct& p);
nlohmann::json json_of(const CoverageReport& r);

Digraph digraph_from_json(const nlohmann::json& j);
TotalLabeling labeling_from_json(const nlohmann::json& j);
SFamilyMember s_member_from_json(const nlohmann::json& j);
TFamilyMember t_member_from_json(const nlohmann::json& j);
SEdgeAssignment s_assignment_from_json(const nlohmann::json& j,
                                       const Digraph& domain);
TEdgeAssignment t_assignment_from_json(const nlohmann::json& j,
                                       const Digraph& domain);

// Parse failures and unreadable files throw SchemaError.
nlohmann::json parse_json_file(const std::string& path);

// Accepts "cycle:<n>", "path:<n>", or a path to a digraph JSON file.
Digraph graph_from_spec(const std::string& spec);

}  // namespace magiclab
