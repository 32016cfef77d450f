#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cathom/diagram.hpp"
#include "cathom/homology.hpp"

namespace cathom {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);
/// Deterministic two-space indentation plus trailing newline.
void write_json_file(const std::string& path, const Json& j);

/// { "objects": [...], "morphisms": [{"id","src","tgt"}...],
///   "identities": {obj: morid}, "compose": [{"g","f","gf"}...] }
/// Identities and identity composites may be omitted.
CatPtr category_from_json(const Json& j);
Json category_to_json(const FinCat& c);

/// { "dim_cap": n, "nd": {"<dim>": [ids]}, "faces": {id: [formal strings]} }
/// with formal simplex syntax "s3 s1 | baseId".
SSetPtr sset_from_json(const Json& j);
Json sset_to_json(const SSet& k);

/// { "category": <path or inline>, "values": {obj: <path or inline>},
///   "action": {morid: {nd id: formal string}} }.  Relative paths are
/// resolved against base_dir.
Diagram diagram_from_json(const Json& j, const std::string& base_dir);
Diagram load_diagram_file(const std::string& path);
Json diagram_to_json(const Diagram& x);

Json sset_map_to_json(const SSetMap& f);
Json diagram_map_to_json(const DiagramMap& f);

Json homology_to_json(const std::vector<HomologyGroup>& h);

} // namespace cathom
