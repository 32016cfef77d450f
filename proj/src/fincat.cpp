#include "cathom/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cathom {

bool FinCat::has_object(const std::string& o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

bool FinCat::has_morphism(const std::string& m) const {
  return std::any_of(morphisms.begin(), morphisms.end(),
                     [&](const Mor& x) { return x.id == m; });
}

const Mor& FinCat::mor(const std::string& m) const {
  for (const Mor& x : morphisms)
    if (x.id == m) return x;
  fail("UnknownMorphism", m);
}

const std::string& FinCat::identity(const std::string& obj) const {
  auto it = identities.find(obj);
  if (it == identities.end()) fail("UnknownObject", obj);
  return it->second;
}

bool FinCat::is_identity(const std::string& m) const {
  const Mor& x = mor(m);
  return x.src == x.tgt && identities.at(x.src) == m;
}

const std::string& FinCat::compose(const std::string& g, const std::string& f) const {
  auto it = table.find({g, f});
  if (it == table.end())
    fail("MissingComposite", "(" + g + " ∘ " + f + ")");
  return it->second;
}

std::vector<std::string> FinCat::hom(const std::string& d, const std::string& c) const {
  std::vector<std::string> out;
  for (const Mor& m : morphisms)
    if (m.src == d && m.tgt == c) out.push_back(m.id);
  return out;
}

void FinCat::validate() const {
  std::set<std::string> obj_set(objects.begin(), objects.end());
  if (obj_set.size() != objects.size()) fail("BadIdentity", "duplicate object id");
  std::set<std::string> mor_set;
  for (const Mor& m : morphisms) {
    if (!mor_set.insert(m.id).second) fail("BadIdentity", "duplicate morphism id " + m.id);
    if (!obj_set.count(m.src) || !obj_set.count(m.tgt))
      fail("UnknownObject", "endpoints of " + m.id);
  }
  for (const std::string& o : objects) {
    auto it = identities.find(o);
    if (it == identities.end()) fail("BadIdentity", "no identity for " + o);
    const Mor& id = mor(it->second);
    if (id.src != o || id.tgt != o) fail("BadIdentity", "identity endpoints for " + o);
  }
  // totality and endpoint sanity of the composition table
  for (const Mor& f : morphisms) {
    for (const Mor& g : morphisms) {
      if (f.tgt != g.src) {
        if (table.count({g.id, f.id}))
          fail("MissingComposite", "spurious entry (" + g.id + "," + f.id + ")");
        continue;
      }
      auto it = table.find({g.id, f.id});
      if (it == table.end())
        fail("MissingComposite", "(" + g.id + " ∘ " + f.id + ")");
      const Mor& gf = mor(it->second);
      if (gf.src != f.src || gf.tgt != g.tgt)
        fail("MissingComposite", "composite endpoints for (" + g.id + "," + f.id + ")");
    }
  }
  // units
  for (const Mor& f : morphisms) {
    if (compose(f.id, identities.at(f.src)) != f.id ||
        compose(identities.at(f.tgt), f.id) != f.id)
      fail("BadIdentity", "unit law fails at " + f.id);
  }
  // associativity, exhaustive
  for (const Mor& f : morphisms)
    for (const Mor& g : morphisms) {
      if (f.tgt != g.src) continue;
      for (const Mor& h : morphisms) {
        if (g.tgt != h.src) continue;
        if (compose(h.id, compose(g.id, f.id)) != compose(compose(h.id, g.id), f.id))
          fail("NonAssociative", "(" + h.id + "," + g.id + "," + f.id + ")");
      }
    }
}

CatPtr make_category(const CatSpec& spec) {
  auto c = std::make_shared<FinCat>();
  c->objects = spec.objects;
  c->morphisms = spec.morphisms;
  c->identities = spec.identities;
  c->table = spec.compose;
  std::set<std::string> known(c->objects.begin(), c->objects.end());
  for (const Mor& m : c->morphisms)
    if (!known.count(m.src) || !known.count(m.tgt))
      fail("UnknownObject", "morphism '" + m.id + "' has unknown endpoint");
  // auto-insert identities
  for (const std::string& o : c->objects) {
    if (!c->identities.count(o)) {
      std::string id = "id_" + o;
      c->identities[o] = id;
      if (!c->has_morphism(id)) c->morphisms.push_back({id, o, o});
    } else if (!c->has_morphism(c->identities.at(o))) {
      c->morphisms.push_back({c->identities.at(o), o, o});
    }
  }
  // infer missing composites with identities, keeping explicit entries so
  // validation can reject tables that break the unit laws
  for (const Mor& f : c->morphisms) {
    c->table.insert({{f.id, c->identities.at(f.src)}, f.id});
    c->table.insert({{c->identities.at(f.tgt), f.id}, f.id});
  }
  c->validate();
  return c;
}

CatPtr opposite(const CatPtr& cat) {
  auto o = std::make_shared<FinCat>();
  o->objects = cat->objects;
  for (const Mor& m : cat->morphisms) o->morphisms.push_back({m.id, m.tgt, m.src});
  o->identities = cat->identities;
  for (const auto& [gf, c] : cat->table) o->table[{gf.second, gf.first}] = c;
  o->validate();
  return o;
}

std::string pair_obj_id(const std::string& c, const std::string& a) {
  return "(" + c + "," + a + ")";
}
std::string pair_mor_id(const std::string& f, const std::string& g) {
  return "(" + f + "," + g + ")";
}

std::pair<std::string, std::string> split_pair_id(const std::string& id) {
  // "(x,y)" where x and y may themselves contain balanced parentheses
  int depth = 0;
  for (size_t i = 1; i + 1 < id.size(); ++i) {
    char ch = id[i];
    if (ch == '(') depth++;
    else if (ch == ')') depth--;
    else if (ch == ',' && depth == 0)
      return {id.substr(1, i - 1), id.substr(i + 1, id.size() - i - 2)};
  }
  fail("ParseError", "not a pair id: " + id);
}

CatPtr product(const CatPtr& c, const CatPtr& a) {
  auto p = std::make_shared<FinCat>();
  for (const std::string& oc : c->objects)
    for (const std::string& oa : a->objects)
      p->objects.push_back(pair_obj_id(oc, oa));
  for (const Mor& f : c->morphisms)
    for (const Mor& g : a->morphisms)
      p->morphisms.push_back({pair_mor_id(f.id, g.id),
                              pair_obj_id(f.src, g.src),
                              pair_obj_id(f.tgt, g.tgt)});
  std::sort(p->objects.begin(), p->objects.end());
  std::sort(p->morphisms.begin(), p->morphisms.end(),
            [](const Mor& x, const Mor& y) { return x.id < y.id; });
  for (const std::string& oc : c->objects)
    for (const std::string& oa : a->objects)
      p->identities[pair_obj_id(oc, oa)] =
          pair_mor_id(c->identities.at(oc), a->identities.at(oa));
  for (const auto& [gfc, hc] : c->table)
    for (const auto& [gfa, ha] : a->table)
      p->table[{pair_mor_id(gfc.first, gfa.first), pair_mor_id(gfc.second, gfa.second)}] =
          pair_mor_id(hc, ha);
  p->validate();
  return p;
}

void CatFunctor::validate() const {
  for (const std::string& o : source->objects) {
    if (!on_objects.count(o)) fail("UnknownObject", "functor undefined at " + o);
    if (!target->has_object(on_objects.at(o)))
      fail("UnknownObject", "functor image " + on_objects.at(o));
  }
  for (const Mor& m : source->morphisms) {
    if (!on_morphisms.count(m.id)) fail("UnknownMorphism", "functor undefined at " + m.id);
    const Mor& fm = target->mor(on_morphisms.at(m.id));
    if (fm.src != on_objects.at(m.src) || fm.tgt != on_objects.at(m.tgt))
      fail("BadFunctor", "endpoints not preserved at " + m.id);
  }
  for (const std::string& o : source->objects)
    if (on_morphisms.at(source->identities.at(o)) !=
        target->identities.at(on_objects.at(o)))
      fail("BadFunctor", "identity not preserved at " + o);
  for (const auto& [gf, h] : source->table)
    if (target->compose(on_morphisms.at(gf.first), on_morphisms.at(gf.second)) !=
        on_morphisms.at(h))
      fail("BadFunctor", "composition not preserved at (" + gf.first + "," + gf.second + ")");
}

CatFunctor identity_functor(const CatPtr& c) {
  CatFunctor f{c, c, {}, {}};
  for (const std::string& o : c->objects) f.on_objects[o] = o;
  for (const Mor& m : c->morphisms) f.on_morphisms[m.id] = m.id;
  return f;
}

CatFunctor compose(const CatFunctor& g, const CatFunctor& f) {
  CatFunctor h{f.source, g.target, {}, {}};
  for (const auto& [o, fo] : f.on_objects) h.on_objects[o] = g.on_objects.at(fo);
  for (const auto& [m, fm] : f.on_morphisms) h.on_morphisms[m] = g.on_morphisms.at(fm);
  return h;
}

CatFunctor opposite_functor(const CatFunctor& f) {
  return CatFunctor{opposite(f.source), opposite(f.target), f.on_objects, f.on_morphisms};
}

void CatNatTrans::validate() const {
  const CatFunctor& F = source;
  const CatFunctor& G = target;
  if (F.source != G.source || F.target != G.target)
    fail("InvalidNatTrans", "parallel functors required");
  const FinCat& B = *F.target;
  for (const std::string& a : F.source->objects) {
    auto it = components.find(a);
    if (it == components.end()) fail("InvalidNatTrans", "no component at " + a);
    const Mor& comp = B.mor(it->second);
    if (comp.src != F.on_objects.at(a) || comp.tgt != G.on_objects.at(a))
      fail("InvalidNatTrans", "component endpoints at " + a);
  }
  for (const Mor& m : F.source->morphisms) {
    // G(m)∘comp(src) = comp(tgt)∘F(m)
    if (B.compose(G.on_morphisms.at(m.id), components.at(m.src)) !=
        B.compose(components.at(m.tgt), F.on_morphisms.at(m.id)))
      fail("InvalidNatTrans", "naturality fails at " + m.id);
  }
}

SubcatResult full_subcategory(const CatPtr& c, const std::set<std::string>& objs) {
  for (const std::string& o : objs)
    if (!c->has_object(o)) fail("UnknownObject", o);
  auto d = std::make_shared<FinCat>();
  for (const std::string& o : c->objects)
    if (objs.count(o)) d->objects.push_back(o);
  for (const Mor& m : c->morphisms)
    if (objs.count(m.src) && objs.count(m.tgt)) d->morphisms.push_back(m);
  for (const std::string& o : d->objects) d->identities[o] = c->identities.at(o);
  for (const auto& [gf, h] : c->table)
    if (d->has_morphism(gf.first) && d->has_morphism(gf.second)) d->table[gf] = h;
  d->validate();
  CatFunctor incl{d, c, {}, {}};
  for (const std::string& o : d->objects) incl.on_objects[o] = o;
  for (const Mor& m : d->morphisms) incl.on_morphisms[m.id] = m.id;
  incl.validate();
  return {d, incl};
}

namespace {

std::string comma_obj_id(const CommaObject& t) {
  return "(" + t.alpha + "/" + t.mid + "/" + t.gamma + ")";
}

std::string comma_mor_id(const std::string& from, const std::string& beta,
                         const std::string& to) {
  return from + "-" + beta + ">" + to;
}

} // namespace

CommaCat comma_double(const CatPtr& c, const std::set<std::string>& d_objs,
                      const std::string& d, const std::string& cobj) {
  if (!d_objs.count(d)) fail("UnknownObject", d + " not in D");
  if (!c->has_object(cobj)) fail("UnknownObject", cobj);
  for (const std::string& o : d_objs)
    if (!c->has_object(o)) fail("UnknownObject", o);

  CommaCat out;
  auto k = std::make_shared<FinCat>();
  std::vector<CommaObject> triples;
  for (const std::string& d0 : c->objects) {
    if (!d_objs.count(d0)) continue;
    for (const std::string& alpha : c->hom(d, d0))
      for (const std::string& gamma : c->hom(d0, cobj))
        triples.push_back({alpha, d0, gamma});
  }
  for (const CommaObject& t : triples) {
    std::string id = comma_obj_id(t);
    k->objects.push_back(id);
    out.label[id] = t;
  }
  std::sort(k->objects.begin(), k->objects.end());
  // morphisms: beta in D with alpha' = beta∘alpha and gamma = gamma'∘beta
  struct Arrow { std::string from, to, beta; };
  std::vector<Arrow> arrows;
  for (const CommaObject& t : triples)
    for (const CommaObject& u : triples)
      for (const std::string& beta : c->hom(t.mid, u.mid)) {
        if (c->compose(beta, t.alpha) != u.alpha) continue;
        if (c->compose(u.gamma, beta) != t.gamma) continue;
        arrows.push_back({comma_obj_id(t), comma_obj_id(u), beta});
      }
  for (const Arrow& a : arrows)
    k->morphisms.push_back({comma_mor_id(a.from, a.beta, a.to), a.from, a.to});
  std::sort(k->morphisms.begin(), k->morphisms.end(),
            [](const Mor& x, const Mor& y) { return x.id < y.id; });
  for (const std::string& o : k->objects)
    k->identities[o] = comma_mor_id(o, c->identities.at(out.label.at(o).mid), o);
  for (const Mor& f : k->morphisms)
    for (const Mor& g : k->morphisms) {
      if (f.tgt != g.src) continue;
      // id = src + "-" + beta + ">" + tgt
      auto beta_from = [](const Mor& m) {
        std::string mid = m.id.substr(m.src.size() + 1);
        return mid.substr(0, mid.size() - m.tgt.size() - 1);
      };
      std::string comp = c->compose(beta_from(g), beta_from(f));
      k->table[{g.id, f.id}] = comma_mor_id(f.src, comp, g.tgt);
    }
  for (const Mor& m : k->morphisms) {
    std::string mid = m.id.substr(m.src.size() + 1);
    out.beta[m.id] = mid.substr(0, mid.size() - m.tgt.size() - 1);
  }
  k->validate();
  out.cat = k;
  return out;
}

const std::string& SliceCat::object_id(const std::string& obj,
                                       const std::string& arrow) const {
  for (const auto& [id, s] : label)
    if (s.obj == obj && s.arrow == arrow) return id;
  fail("UnknownObject", "no slice object (" + obj + ", " + arrow + ")");
}

namespace {

std::string slice_obj_id(const SliceObject& s) {
  return "(" + s.obj + "/" + s.arrow + ")";
}

SliceCat slice_generic(const CatPtr& c, const std::set<std::string>& d_objs,
                       const std::string& cobj, bool under) {
  if (!c->has_object(cobj)) fail("UnknownObject", cobj);
  for (const std::string& o : d_objs)
    if (!c->has_object(o)) fail("UnknownObject", o);
  SliceCat out;
  auto k = std::make_shared<FinCat>();
  std::vector<SliceObject> items;
  for (const std::string& dp : c->objects) {
    if (!d_objs.count(dp)) continue;
    auto arrows = under ? c->hom(cobj, dp) : c->hom(dp, cobj);
    for (const std::string& a : arrows) items.push_back({dp, a});
  }
  for (const SliceObject& s : items) {
    std::string id = slice_obj_id(s);
    k->objects.push_back(id);
    out.label[id] = s;
  }
  std::sort(k->objects.begin(), k->objects.end());
  struct Arrow { std::string from, to, beta; };
  std::vector<Arrow> arrows;
  for (const SliceObject& s : items)
    for (const SliceObject& t : items)
      for (const std::string& beta : c->hom(s.obj, t.obj)) {
        bool ok = under ? (c->compose(beta, s.arrow) == t.arrow)
                        : (c->compose(t.arrow, beta) == s.arrow);
        if (ok) arrows.push_back({slice_obj_id(s), slice_obj_id(t), beta});
      }
  for (const Arrow& a : arrows)
    k->morphisms.push_back({comma_mor_id(a.from, a.beta, a.to), a.from, a.to});
  std::sort(k->morphisms.begin(), k->morphisms.end(),
            [](const Mor& x, const Mor& y) { return x.id < y.id; });
  for (const std::string& o : k->objects)
    k->identities[o] = comma_mor_id(o, c->identities.at(out.label.at(o).obj), o);
  auto beta_from = [](const Mor& m) {
    std::string mid = m.id.substr(m.src.size() + 1);
    return mid.substr(0, mid.size() - m.tgt.size() - 1);
  };
  for (const Mor& f : k->morphisms)
    for (const Mor& g : k->morphisms) {
      if (f.tgt != g.src) continue;
      std::string comp = c->compose(beta_from(g), beta_from(f));
      k->table[{g.id, f.id}] = comma_mor_id(f.src, comp, g.tgt);
    }
  for (const Mor& m : k->morphisms) out.beta[m.id] = beta_from(m);
  k->validate();
  out.cat = k;
  return out;
}

} // namespace

SliceCat comma_slice(const CatPtr& c, const std::set<std::string>& d_objs,
                     const std::string& cobj) {
  return slice_generic(c, d_objs, cobj, /*under=*/false);
}

SliceCat comma_under(const CatPtr& c, const std::set<std::string>& d_objs,
                     const std::string& cobj) {
  return slice_generic(c, d_objs, cobj, /*under=*/true);
}

bool is_loop_free(const FinCat& c) {
  for (const Mor& m : c.morphisms)
    if (m.src == m.tgt && !c.is_identity(m.id)) return false;
  // acyclicity of nonidentity reachability (DFS)
  std::map<std::string, std::vector<std::string>> next;
  for (const Mor& m : c.morphisms)
    if (!c.is_identity(m.id)) next[m.src].push_back(m.tgt);
  std::map<std::string, int> state; // 0 unseen, 1 on stack, 2 done
  std::function<bool(const std::string&)> dfs = [&](const std::string& v) -> bool {
    state[v] = 1;
    for (const std::string& w : next[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (const std::string& o : c.objects)
    if (state[o] == 0 && !dfs(o)) return false;
  return true;
}

} // namespace cathom
