#include "cathom/diagram.hpp"

#include <algorithm>

#include "cathom/homology.hpp"

namespace cathom {

const SSetPtr& Diagram::at(const std::string& obj) const {
  auto it = value.find(obj);
  if (it == value.end()) fail("UnknownObject", "diagram has no value at '" + obj + "'");
  return it->second;
}

const SSetMap& Diagram::act(const std::string& mor) const {
  auto it = action.find(mor);
  if (it == action.end()) fail("UnknownObject", "diagram has no action at '" + mor + "'");
  return it->second;
}

void Diagram::validate() const {
  if (!index) fail("UnknownObject", "diagram without index category");
  for (const auto& o : index->objects) at(o);
  for (const Mor& m : index->morphisms) {
    const SSetMap& f = act(m.id);
    if (!(*f.source == *at(m.src)) || !(*f.target == *at(m.tgt)))
      fail("SourceTargetMismatch", "action endpoints wrong at '" + m.id + "'");
    f.validate();
  }
  for (const auto& o : index->objects)
    if (!(act(index->identity(o)) == identity_map(at(o))))
      fail("IndexMismatch", "action of identity at '" + o + "' is not the identity");
  for (const Mor& f : index->morphisms)
    for (const Mor& g : index->morphisms) {
      if (f.tgt != g.src) continue;
      if (!(act(index->compose(g.id, f.id)) == compose(act(g.id), act(f.id))))
        fail("IndexMismatch",
             "functoriality fails at '" + g.id + "' ∘ '" + f.id + "'");
    }
}

void DiagramMap::validate() const {
  if (!(*source.index == *target.index))
    fail("SourceTargetMismatch", "diagram map endpoints have different indices");
  for (const auto& o : source.index->objects) {
    const SSetMap& c = at(o);
    if (!(*c.source == *source.at(o)) || !(*c.target == *target.at(o)))
      fail("SourceTargetMismatch", "component endpoints wrong at '" + o + "'");
    c.validate();
  }
  for (const Mor& m : source.index->morphisms)
    if (!(compose(at(m.tgt), source.act(m.id)) == compose(target.act(m.id), at(m.src))))
      fail("IndexMismatch", "naturality fails at '" + m.id + "'");
}

bool DiagramMap::operator==(const DiagramMap& o) const {
  return components == o.components && *source.index == *o.source.index;
}

Diagram constant_diagram(const CatPtr& c, const SSetPtr& k) {
  Diagram x;
  x.index = c;
  for (const auto& o : c->objects) x.value[o] = k;
  for (const Mor& m : c->morphisms) x.action[m.id] = identity_map(k);
  return x;
}

DiagramMap identity_diagram_map(const Diagram& x) {
  DiagramMap f{x, x, {}};
  for (const auto& o : x.index->objects) f.components[o] = identity_map(x.at(o));
  return f;
}

DiagramMap compose(const DiagramMap& g, const DiagramMap& f) {
  DiagramMap h{f.source, g.target, {}};
  for (const auto& o : f.source.index->objects)
    h.components[o] = compose(g.at(o), f.at(o));
  return h;
}

Diagram restrict_diagram(const Diagram& x, const std::set<std::string>& d_objs) {
  SubcatResult sub = full_subcategory(x.index, d_objs);
  Diagram y;
  y.index = sub.cat;
  for (const auto& o : sub.cat->objects) y.value[o] = x.at(o);
  for (const Mor& m : sub.cat->morphisms) y.action[m.id] = x.act(m.id);
  return y;
}

DiagramMap restrict_diagram_map(const DiagramMap& f, const std::set<std::string>& d_objs) {
  DiagramMap g{restrict_diagram(f.source, d_objs), restrict_diagram(f.target, d_objs), {}};
  for (const auto& o : g.source.index->objects) g.components[o] = f.at(o);
  return g;
}

ColimResult colim_diagram(const Diagram& x, int empty_cap) {
  const CatPtr& c = x.index;
  ColimResult r;
  if (c->objects.empty()) {
    auto empty = std::make_shared<SSet>(empty_cap);
    r.sset = empty;
    r.cop = CoproductSSet{empty, {}, {}};
    r.coeq.domain = empty;
    r.coeq.sset = empty;
    r.coeq.projection = SSetMap{empty, empty, {}};
    return r;
  }
  std::vector<SSetPtr> obj_parts;
  std::vector<std::string> obj_tags;
  for (const auto& o : c->objects) {
    obj_parts.push_back(x.at(o));
    obj_tags.push_back(o);
  }
  r.cop = coproduct(obj_parts, obj_tags);

  std::vector<SSetPtr> mor_parts;
  std::vector<std::string> mor_tags;
  std::vector<SSetMap> top_legs, bottom_legs;
  std::map<std::string, size_t> obj_index;
  for (size_t i = 0; i < obj_tags.size(); ++i) obj_index[obj_tags[i]] = i;
  for (const Mor& m : c->morphisms) {
    mor_parts.push_back(x.at(m.src));
    mor_tags.push_back(m.id);
    top_legs.push_back(compose(r.cop.injections[obj_index.at(m.tgt)], x.act(m.id)));
    bottom_legs.push_back(r.cop.injections[obj_index.at(m.src)]);
  }
  CoproductSSet mc = coproduct(mor_parts, mor_tags);
  SSetMap top = coproduct_map(mc, top_legs);
  SSetMap bottom = coproduct_map(mc, bottom_legs);
  r.coeq = coequalizer(top, bottom);
  r.sset = r.coeq.sset;
  for (const auto& o : c->objects)
    r.legs[o] = compose(r.coeq.projection, r.cop.injections[obj_index.at(o)]);
  return r;
}

SSetMap colim_induced(const ColimResult& cx,
                      const std::map<std::string, SSetMap>& cocone,
                      const SSetPtr& target) {
  if (cx.cop.tags.empty()) {
    if (!target)
      fail("SourceTargetMismatch", "empty colimit needs an explicit target");
    return SSetMap{cx.sset, target, {}};
  }
  std::vector<SSetMap> legs;
  for (const auto& tag : cx.cop.tags) legs.push_back(cocone.at(tag));
  return induced_map(cx.coeq, coproduct_map(cx.cop, legs));
}

SSetMap colim_map(const ColimResult& cx, const ColimResult& cy, const DiagramMap& f) {
  std::map<std::string, SSetMap> cocone;
  for (const auto& [o, leg] : cy.legs) cocone[o] = compose(leg, f.at(o));
  return colim_induced(cx, cocone, cy.sset);
}

const SSetMap& InducedDiagram::leg(const std::string& c, const std::string& dprime,
                                   const std::string& alpha) const {
  const SliceCat& slice = slices.at(c);
  return colims.at(c).legs.at(slice.object_id(dprime, alpha));
}

InducedDiagram induce(const Diagram& y, const CatPtr& c) {
  InducedDiagram out;
  for (const auto& o : y.index->objects) out.d_objs.insert(o);
  if (out.d_objs.empty()) fail("UnknownObject", "induction needs a nonempty subcategory");
  int cap = y.at(*out.d_objs.begin())->dim_cap();
  out.diagram.index = c;

  for (const auto& cobj : c->objects) {
    SliceCat slice = comma_slice(c, out.d_objs, cobj);
    Diagram over_slice;
    over_slice.index = slice.cat;
    for (const auto& [sid, so] : slice.label) over_slice.value[sid] = y.at(so.obj);
    for (const Mor& m : slice.cat->morphisms)
      over_slice.action[m.id] = y.act(slice.beta.at(m.id));
    out.colims[cobj] = colim_diagram(over_slice, cap);
    out.diagram.value[cobj] = out.colims.at(cobj).sset;
    out.slices[cobj] = std::move(slice);
  }

  for (const Mor& g : c->morphisms) {
    const SliceCat& s_src = out.slices.at(g.src);
    const ColimResult& c_tgt = out.colims.at(g.tgt);
    const SliceCat& s_tgt = out.slices.at(g.tgt);
    std::map<std::string, SSetMap> cocone;
    for (const auto& [sid, so] : s_src.label) {
      std::string pushed = c->compose(g.id, so.arrow);
      cocone[sid] = c_tgt.legs.at(s_tgt.object_id(so.obj, pushed));
    }
    out.diagram.action[g.id] =
        colim_induced(out.colims.at(g.src), cocone, out.diagram.value.at(g.tgt));
  }
  out.diagram.validate();
  return out;
}

DiagramMap adjunction_unit(const Diagram& y, const InducedDiagram& ind) {
  Diagram res = restrict_diagram(ind.diagram, ind.d_objs);
  DiagramMap eta{y, res, {}};
  for (const auto& d : y.index->objects)
    eta.components[d] = ind.leg(d, d, ind.diagram.index->identity(d));
  eta.validate();
  return eta;
}

CounitResult counit(const Diagram& x, const std::set<std::string>& d_objs) {
  CounitResult r;
  Diagram y = restrict_diagram(x, d_objs);
  r.induced = induce(y, x.index);
  r.eps = DiagramMap{r.induced.diagram, x, {}};
  for (const auto& cobj : x.index->objects) {
    std::map<std::string, SSetMap> cocone;
    for (const auto& [sid, so] : r.induced.slices.at(cobj).label)
      cocone[sid] = x.act(so.arrow);
    r.eps.components[cobj] =
        colim_induced(r.induced.colims.at(cobj), cocone, x.at(cobj));
  }
  r.eps.validate();
  return r;
}

bool is_objectwise_homology_equivalence(const DiagramMap& f,
                                        const std::set<std::string>& d_objs,
                                        int up_to) {
  for (const auto& d : d_objs)
    if (!is_homology_equivalence(f.at(d), up_to)) return false;
  return true;
}

std::vector<DiagramMap> enumerate_diagram_maps(const Diagram& x, const Diagram& y,
                                               long budget) {
  std::vector<std::string> objs = x.index->objects;
  std::sort(objs.begin(), objs.end());
  std::vector<std::vector<SSetMap>> cands;
  for (const auto& o : objs) cands.push_back(enumerate_maps(x.at(o), y.at(o), budget));

  std::vector<DiagramMap> out;
  std::map<std::string, SSetMap> chosen;
  std::set<std::string> assigned;
  long nodes = budget;
  std::function<void(size_t)> go = [&](size_t pos) {
    if (pos == objs.size()) {
      DiagramMap f{x, y, chosen};
      out.push_back(std::move(f));
      return;
    }
    const std::string& o = objs[pos];
    for (const SSetMap& cand : cands[pos]) {
      if (--nodes < 0)
        fail("SearchBudgetExceeded", "diagram map enumeration budget exhausted");
      bool ok = true;
      for (const Mor& m : x.index->morphisms) {
        if (m.src == o && assigned.count(m.tgt)) {
          if (!(compose(chosen.at(m.tgt), x.act(m.id)) == compose(y.act(m.id), cand))) {
            ok = false;
            break;
          }
        } else if (m.tgt == o && assigned.count(m.src)) {
          if (!(compose(cand, x.act(m.id)) == compose(y.act(m.id), chosen.at(m.src)))) {
            ok = false;
            break;
          }
        } else if (m.src == o && m.tgt == o) {
          if (!(compose(cand, x.act(m.id)) == compose(y.act(m.id), cand))) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      chosen.emplace(o, cand);
      assigned.insert(o);
      go(pos + 1);
      chosen.erase(o);
      assigned.erase(o);
    }
  };
  go(0);
  return out;
}

DiagramMap transpose_to_res(const DiagramMap& g, const Diagram& y,
                            const InducedDiagram& ind) {
  Diagram res_z = restrict_diagram(g.target, ind.d_objs);
  DiagramMap h{y, res_z, {}};
  for (const auto& d : y.index->objects)
    h.components[d] =
        compose(g.at(d), ind.leg(d, d, ind.diagram.index->identity(d)));
  return h;
}

DiagramMap transpose_to_ind(const DiagramMap& h, const Diagram& z,
                            const InducedDiagram& ind) {
  DiagramMap g{ind.diagram, z, {}};
  for (const auto& cobj : z.index->objects) {
    std::map<std::string, SSetMap> cocone;
    for (const auto& [sid, so] : ind.slices.at(cobj).label)
      cocone[sid] = compose(z.act(so.arrow), h.at(so.obj));
    g.components[cobj] = colim_induced(ind.colims.at(cobj), cocone, z.at(cobj));
  }
  return g;
}

bool ind_res_adjunction_check(const Diagram& y, const Diagram& z,
                              const std::set<std::string>& d_objs, long budget) {
  (void)d_objs;
  InducedDiagram ind = induce(y, z.index);
  Diagram res_z = restrict_diagram(z, ind.d_objs);
  std::vector<DiagramMap> left = enumerate_diagram_maps(ind.diagram, z, budget);
  std::vector<DiagramMap> right = enumerate_diagram_maps(y, res_z, budget);
  if (left.size() != right.size()) return false;
  // transpose each left map and find it among the right maps, injectively
  std::vector<bool> hit(right.size(), false);
  for (const auto& g : left) {
    DiagramMap t = transpose_to_res(g, y, ind);
    bool found = false;
    for (size_t i = 0; i < right.size(); ++i) {
      if (hit[i] || !(right[i] == t)) continue;
      // and transposing back must return g
      DiagramMap back = transpose_to_ind(right[i], z, ind);
      if (!(back == g)) return false;
      hit[i] = true;
      found = true;
      break;
    }
    if (!found) return false;
  }
  return true;
}

} // namespace cathom
