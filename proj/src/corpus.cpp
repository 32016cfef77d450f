#include "cathom/corpus.hpp"

namespace cathom {

std::vector<std::string> corpus_category_names() {
  return {"terminal", "interval", "span", "cospan", "square"};
}

CatPtr corpus_category(const std::string& name) {
  CatSpec s;
  if (name == "terminal") {
    s.objects = {"*"};
  } else if (name == "interval") {
    s.objects = {"0", "1"};
    s.morphisms = {{"u", "0", "1"}};
  } else if (name == "span") {
    s.objects = {"a", "b", "c"};
    s.morphisms = {{"f", "b", "a"}, {"g", "b", "c"}};
  } else if (name == "cospan") {
    s.objects = {"a", "b", "c"};
    s.morphisms = {{"f", "a", "b"}, {"g", "c", "b"}};
  } else if (name == "square") {
    s.objects = {"00", "01", "10", "11"};
    s.morphisms = {{"h0", "00", "10"},
                   {"h1", "01", "11"},
                   {"v0", "00", "01"},
                   {"v1", "10", "11"},
                   {"dg", "00", "11"}};
    s.compose = {{{"v1", "h0"}, "dg"}, {{"h1", "v0"}, "dg"}};
  } else {
    fail("UnknownObject", "no built-in category '" + name + "'");
  }
  return make_category(s);
}

std::vector<CorpusPair> corpus_pairs() {
  std::vector<CorpusPair> out;
  for (const auto& name : corpus_category_names()) {
    CatPtr c = corpus_category(name);
    std::set<std::string> all(c->objects.begin(), c->objects.end());
    out.push_back({name, c, all});
  }
  out.push_back({"pushout-pair", corpus_category("span"), {"a", "c"}});
  return out;
}

SSetMap collapse_to_point(const SSetPtr& k, const SSetPtr& pt) {
  const std::string v = pt->nd(0).front();
  SSetMap f{k, pt, {}};
  for (int n = 0; n <= k->dim_cap(); ++n)
    for (const auto& id : k->nd(n)) {
      std::vector<int> word;
      for (int j = n - 1; j >= 0; --j) word.push_back(j);
      f.assignment[id] = FormalSimplex{word, v, 0};
    }
  return f;
}

std::vector<std::pair<std::string, Diagram>> corpus_diagrams(const CatPtr& c,
                                                             int dim_cap) {
  std::vector<std::pair<std::string, Diagram>> out;
  SSetPtr pt = delta(0, dim_cap);
  SSetPtr s0 = constant_sset({"p", "q"}, dim_cap);
  SSetPtr bd = boundary_delta(2, dim_cap);
  out.push_back({"point", constant_diagram(c, pt)});
  out.push_back({"s0", constant_diagram(c, s0)});
  out.push_back({"sphere-boundary", constant_diagram(c, bd)});

  // sources (objects without incoming nonidentity arrows) carry the sphere
  std::set<std::string> sources(c->objects.begin(), c->objects.end());
  for (const Mor& m : c->morphisms)
    if (!c->is_identity(m.id)) sources.erase(m.tgt);
  Diagram mixed;
  mixed.index = c;
  for (const auto& o : c->objects) mixed.value[o] = sources.count(o) ? bd : pt;
  for (const Mor& m : c->morphisms) {
    const SSetPtr& src = mixed.value.at(m.src);
    const SSetPtr& tgt = mixed.value.at(m.tgt);
    mixed.action[m.id] = *src == *tgt ? identity_map(src) : collapse_to_point(src, tgt);
  }
  mixed.validate();
  out.push_back({"mixed", mixed});
  return out;
}

} // namespace cathom
