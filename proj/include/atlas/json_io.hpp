#pragma once

#include <string>

#include <json.hpp>

#include "atlas/classify.hpp"
#include "atlas/model.hpp"

namespace atlas {

// Wire formats. Permutations are JSON arrays of 0-based integers; angles are
// exact fraction strings ("1/2"). Atoms use the tagged "fgraph-v1" layout,
// almost direct products "adp-v1".

nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const PermutationGroup& g);       // degree + generators
PermutationGroup group_from_json(const nlohmann::json& j);

nlohmann::json fgraph_to_json(const FGraph& f, const NameTable& table = builtin_name_table());
FGraph fgraph_from_json(const nlohmann::json& j);

nlohmann::json focus_automorphism_to_json(const FocusAutomorphism& a);
FocusAutomorphism focus_automorphism_from_json(const nlohmann::json& j, int n);

nlohmann::json product_to_json(const AlmostDirectProduct& adp,
                               const NameTable& table = builtin_name_table());
AlmostDirectProduct product_from_json(const nlohmann::json& j,
                                      const NameTable& table = builtin_name_table());

nlohmann::json fingerprint_to_json(const Fingerprint& fp);
nlohmann::json catalog_to_json(const Catalog& catalog);

nlohmann::json parse_json_text(const std::string& text);  // ValidationError on bad JSON
nlohmann::json load_json_file(const std::string& path);

}  // namespace atlas
