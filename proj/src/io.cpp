#include "cathom/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>

namespace cathom {

namespace {

const Json& field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail("ParseError", "missing field '" + key + "'");
  return *it;
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

} // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("ParseError", "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) fail("ParseError", "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

CatPtr category_from_json(const Json& j) {
  if (!j.is_object()) fail("ParseError", "category file must be a JSON object");
  CatSpec s;
  for (const auto& o : field(j, "objects")) s.objects.push_back(o.get<std::string>());
  if (j.contains("morphisms"))
    for (const auto& m : j.at("morphisms"))
      s.morphisms.push_back({field(m, "id").get<std::string>(),
                             field(m, "src").get<std::string>(),
                             field(m, "tgt").get<std::string>()});
  if (j.contains("identities"))
    for (const auto& [obj, id] : j.at("identities").items())
      s.identities[obj] = id.get<std::string>();
  if (j.contains("compose"))
    for (const auto& e : j.at("compose"))
      s.compose[{field(e, "g").get<std::string>(), field(e, "f").get<std::string>()}] =
          field(e, "gf").get<std::string>();
  return make_category(s);
}

Json category_to_json(const FinCat& c) {
  Json j;
  j["objects"] = c.objects;
  Json mors = Json::array();
  for (const Mor& m : c.morphisms)
    mors.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  j["morphisms"] = mors;
  j["identities"] = c.identities;
  Json comp = Json::array();
  for (const auto& [gf, h] : c.table)
    comp.push_back({{"g", gf.first}, {"f", gf.second}, {"gf", h}});
  j["compose"] = comp;
  return j;
}

SSetPtr sset_from_json(const Json& j) {
  if (!j.is_object()) fail("ParseError", "simplicial set file must be a JSON object");
  int cap = field(j, "dim_cap").get<int>();
  auto k = std::make_shared<SSet>(cap);
  std::map<int, std::vector<std::string>> nd;
  for (const auto& [dim, ids] : field(j, "nd").items())
    for (const auto& id : ids) nd[std::stoi(dim)].push_back(id.get<std::string>());
  const Json empty = Json::object();
  const Json& faces = j.contains("faces") ? j.at("faces") : empty;
  for (const auto& [n, ids] : nd)
    for (const auto& id : ids) {
      std::vector<FormalSimplex> fs;
      if (n > 0) {
        auto it = faces.find(id);
        if (it == faces.end())
          fail("ParseError", "missing faces for simplex '" + id + "'");
        for (const auto& s : *it)
          fs.push_back(parse_formal(s.get<std::string>(), n - 1));
      }
      k->add_simplex(id, n, std::move(fs));
    }
  k->validate();
  return k;
}

Json sset_to_json(const SSet& k) {
  Json j;
  j["dim_cap"] = k.dim_cap();
  Json nd = Json::object();
  Json faces = Json::object();
  for (int n = 0; n <= k.dim_cap(); ++n) {
    if (k.nd(n).empty()) continue;
    nd[std::to_string(n)] = k.nd(n);
    if (n == 0) continue;
    for (const auto& id : k.nd(n)) {
      std::vector<std::string> fs;
      for (const auto& f : k.faces_of(id)) fs.push_back(to_string(f));
      faces[id] = fs;
    }
  }
  j["nd"] = nd;
  j["faces"] = faces;
  return j;
}

Diagram diagram_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) fail("ParseError", "diagram file must be a JSON object");
  auto sub = [&](const Json& node) -> Json {
    if (node.is_string()) return load_json_file(resolve(base_dir, node.get<std::string>()));
    return node;
  };
  Diagram x;
  x.index = category_from_json(sub(field(j, "category")));
  for (const auto& [obj, node] : field(j, "values").items())
    x.value[obj] = sset_from_json(sub(node));
  const Json empty = Json::object();
  const Json& action = j.contains("action") ? j.at("action") : empty;
  for (const Mor& m : x.index->morphisms) {
    if (!x.value.count(m.src) || !x.value.count(m.tgt))
      fail("ParseError", "missing value at '" + m.src + "' or '" + m.tgt + "'");
    const SSetPtr& src = x.value.at(m.src);
    const SSetPtr& tgt = x.value.at(m.tgt);
    SSetMap a{src, tgt, {}};
    if (x.index->is_identity(m.id) && !action.contains(m.id)) {
      a = identity_map(src);
    } else {
      auto it = action.find(m.id);
      if (it == action.end())
        fail("ParseError", "missing action for morphism '" + m.id + "'");
      for (const auto& [nd_id, formal] : it->items()) {
        if (!src->has(nd_id))
          fail("ParseError", "unknown simplex '" + nd_id + "' in action of '" + m.id + "'");
        a.assignment[nd_id] =
            parse_formal(formal.get<std::string>(), src->dim_of(nd_id));
      }
    }
    x.action[m.id] = a;
  }
  x.validate();
  return x;
}

Diagram load_diagram_file(const std::string& path) {
  return diagram_from_json(load_json_file(path),
                           std::filesystem::path(path).parent_path().string());
}

Json diagram_to_json(const Diagram& x) {
  Json j;
  j["category"] = category_to_json(*x.index);
  Json values = Json::object();
  for (const auto& [obj, k] : x.value) values[obj] = sset_to_json(*k);
  j["values"] = values;
  Json action = Json::object();
  for (const auto& [mid, f] : x.action) {
    Json a = Json::object();
    for (const auto& [nd_id, formal] : f.assignment) a[nd_id] = to_string(formal);
    action[mid] = a;
  }
  j["action"] = action;
  return j;
}

Json sset_map_to_json(const SSetMap& f) {
  Json a = Json::object();
  for (const auto& [nd_id, formal] : f.assignment) a[nd_id] = to_string(formal);
  return a;
}

Json diagram_map_to_json(const DiagramMap& f) {
  Json j = Json::object();
  for (const auto& [obj, comp] : f.components) j[obj] = sset_map_to_json(comp);
  return j;
}

Json homology_to_json(const std::vector<HomologyGroup>& h) {
  Json j = Json::array();
  for (const auto& g : h) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(d.get_str());
    j.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", t}});
  }
  return j;
}

} // namespace cathom
