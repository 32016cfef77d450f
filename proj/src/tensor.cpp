#include "cathom/tensor.hpp"

#include <algorithm>

namespace cathom {

SSetMap TensorResult::summand(const std::string& a) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == a) return compose(quotient_map, middle.injections[i]);
  fail("UnknownObject", "no tensor summand at '" + a + "'");
}

TensorResult tensor_over(const Diagram& x, const Diagram& y) {
  CatPtr a_op = opposite(y.index);
  if (!(*x.index == *a_op))
    fail("IndexMismatch", "left tensor factor must be indexed by the opposite category");

  TensorResult t;
  t.objects = y.index->objects;
  std::vector<SSetPtr> obj_parts;
  for (const auto& a : t.objects) {
    t.pairs.emplace(a, product(x.at(a), y.at(a)));
    obj_parts.push_back(t.pairs.at(a).sset);
  }
  t.middle = coproduct(obj_parts, t.objects);
  std::map<std::string, size_t> obj_index;
  for (size_t i = 0; i < t.objects.size(); ++i) obj_index[t.objects[i]] = i;

  std::vector<SSetPtr> mor_parts;
  std::vector<std::string> mor_tags;
  std::vector<SSetMap> top_legs, bottom_legs;
  for (const Mor& m : y.index->morphisms) {
    const std::string& b = m.src;
    const std::string& bp = m.tgt;
    ProductSSet pm = product(x.at(bp), y.at(b)); // X(b')×Y(b)
    mor_parts.push_back(pm.sset);
    mor_tags.push_back(m.id);
    // X(α)×Y(b) into the summand at b (x is contravariant: α acts b' -> b)
    top_legs.push_back(compose(
        t.middle.injections[obj_index.at(b)],
        product_map(pm, t.pairs.at(b), x.act(m.id), identity_map(y.at(b)))));
    // X(b')×Y(α) into the summand at b'
    bottom_legs.push_back(compose(
        t.middle.injections[obj_index.at(bp)],
        product_map(pm, t.pairs.at(bp), identity_map(x.at(bp)), y.act(m.id))));
  }
  CoproductSSet mc = coproduct(mor_parts, mor_tags);
  t.coeq = coequalizer(coproduct_map(mc, top_legs), coproduct_map(mc, bottom_legs));
  t.result = t.coeq.sset;
  t.quotient_map = t.coeq.projection;
  return t;
}

SSetMap tensor_map(const TensorResult& src, const TensorResult& dst,
                   const DiagramMap& f, const DiagramMap& g) {
  std::vector<SSetMap> legs;
  for (const auto& a : src.objects)
    legs.push_back(compose(
        dst.summand(a),
        product_map(src.pairs.at(a), dst.pairs.at(a), f.at(a), g.at(a))));
  return induced_map(src.coeq, coproduct_map(src.middle, legs));
}

Diagram bi_tensor_slice(const Diagram& xx, const CatPtr& a_op, const std::string& c) {
  // the identity of c in the second factor: recover it from the identity of
  // any product object (a, c), whose id is pair_mor_id(id_a, id_c)
  if (a_op->objects.empty()) fail("UnknownObject", "empty index category");
  std::string idc =
      split_pair_id(xx.index->identity(pair_obj_id(a_op->objects.front(), c))).second;
  Diagram s;
  s.index = a_op;
  for (const auto& a : a_op->objects) s.value[a] = xx.at(pair_obj_id(a, c));
  for (const Mor& m : a_op->morphisms)
    s.action[m.id] = xx.act(pair_mor_id(m.id, idc));
  return s;
}

BiTensor bi_tensor(const Diagram& xx, const Diagram& y, const CatPtr& c) {
  CatPtr a_op = opposite(y.index);
  if (!(*xx.index == *product(a_op, c)))
    fail("IndexMismatch", "bi-tensor left factor must be indexed by A^op × C");

  BiTensor bt;
  bt.diagram.index = c;
  for (const auto& cobj : c->objects) {
    bt.at.emplace(cobj, tensor_over(bi_tensor_slice(xx, a_op, cobj), y));
    bt.diagram.value[cobj] = bt.at.at(cobj).result;
  }
  DiagramMap idy = identity_diagram_map(y);
  for (const Mor& g : c->morphisms) {
    Diagram s_src = bi_tensor_slice(xx, a_op, g.src);
    Diagram s_tgt = bi_tensor_slice(xx, a_op, g.tgt);
    DiagramMap fg{s_src, s_tgt, {}};
    for (const auto& a : a_op->objects)
      fg.components[a] = xx.act(pair_mor_id(a_op->identity(a), g.id));
    bt.diagram.action[g.id] = tensor_map(bt.at.at(g.src), bt.at.at(g.tgt), fg, idy);
  }
  bt.diagram.validate();
  return bt;
}

BiTensorMap bi_tensor_map(const DiagramMap& f, const Diagram& y, const CatPtr& c) {
  BiTensorMap out{bi_tensor(f.source, y, c), bi_tensor(f.target, y, c), {}};
  CatPtr a_op = opposite(y.index);
  out.map = DiagramMap{out.source.diagram, out.target.diagram, {}};
  DiagramMap idy = identity_diagram_map(y);
  for (const auto& cobj : c->objects) {
    Diagram s_src = bi_tensor_slice(f.source, a_op, cobj);
    Diagram s_tgt = bi_tensor_slice(f.target, a_op, cobj);
    DiagramMap fc{s_src, s_tgt, {}};
    for (const auto& a : a_op->objects)
      fc.components[a] = f.at(pair_obj_id(a, cobj));
    out.map.components[cobj] =
        tensor_map(out.source.at.at(cobj), out.target.at.at(cobj), fc, idy);
  }
  out.map.validate();
  return out;
}

/// ---- mapping spaces ---------------------------------------------------------

std::string encode_map(const SSetMap& m) {
  std::string out;
  for (const auto& [id, y] : m.assignment) out += id + "=>" + to_string(y) + ";";
  return out.empty() ? "<empty>" : out;
}

namespace {

/// Coface δ^i or codegeneracy σ^j action on a formal simplex of Δ^q,
/// expressed on vertex sequences.
FormalSimplex coface_push(const FormalSimplex& t, int i) {
  std::vector<int> verts = delta_vertex_sequence(t);
  for (int& v : verts)
    if (v >= i) ++v;
  return delta_formal_from_vertices(verts);
}

FormalSimplex codegeneracy_push(const FormalSimplex& t, int j) {
  std::vector<int> verts = delta_vertex_sequence(t);
  for (int& v : verts)
    if (v > j) --v;
  return delta_formal_from_vertices(verts);
}

} // namespace

MapSpace map_space(const SSetPtr& k, const SSetPtr& z, long budget) {
  if (k->dim_cap() != z->dim_cap())
    fail("CapExceeded", "mapping space needs matching dimension caps");
  int cap = k->dim_cap();
  MapSpace ms;
  ms.domain = k;
  ms.codomain = z;
  for (int q = 0; q <= cap; ++q) ms.cylinder.emplace(q, product(k, delta(q, cap)));

  LevelwiseData data;
  data.cap = cap;
  data.elems.resize(static_cast<size_t>(cap) + 1);
  for (int q = 0; q <= cap; ++q) {
    for (SSetMap& m : enumerate_maps(ms.cylinder.at(q).sset, z, budget)) {
      std::string name = encode_map(m);
      data.elems[static_cast<size_t>(q)].push_back(name);
      ms.element.emplace(std::make_pair(q, name), std::move(m));
    }
    std::sort(data.elems[static_cast<size_t>(q)].begin(),
              data.elems[static_cast<size_t>(q)].end());
  }

  // precompose with id_K × δ^i (resp. id_K × σ^j)
  auto reindex = [&ms](int q_from, const SSetMap& m, int q_to, auto&& push) {
    const ProductSSet& dst = ms.cylinder.at(q_to);
    const ProductSSet& src = ms.cylinder.at(q_from);
    SSetMap out{dst.sset, m.target, {}};
    for (const auto& [id, comp] : dst.components)
      out.assignment[id] = m.apply(src.pair_formal(comp.first, push(comp.second)));
    return out;
  };
  data.face = [&ms, reindex](int q, const std::string& e, int i) {
    const SSetMap& m = ms.map_of(q, e);
    return encode_map(reindex(q, m, q - 1,
                              [i](const FormalSimplex& t) { return coface_push(t, i); }));
  };
  data.degeneracy = [&ms, reindex](int q, const std::string& e, int j) {
    const SSetMap& m = ms.map_of(q, e);
    return encode_map(reindex(q, m, q + 1, [j](const FormalSimplex& t) {
      return codegeneracy_push(t, j);
    }));
  };
  ms.level = build_from_levelwise(data);
  ms.sset = ms.level.sset;
  return ms;
}

FormalSimplex MapSpace::formal_of(int q, const SSetMap& m) const {
  return level.normal_of(q, encode_map(m));
}

Diagram mapping_diagram(const Diagram& y, const Diagram& z, const CatPtr& c,
                        std::map<std::pair<std::string, std::string>, MapSpace>* spaces,
                        long budget) {
  CatPtr a_op = opposite(y.index);
  CatPtr index = product(a_op, c);
  Diagram r;
  r.index = index;
  for (const auto& a : a_op->objects)
    for (const auto& cobj : c->objects) {
      spaces->emplace(std::make_pair(a, cobj), map_space(y.at(a), z.at(cobj), budget));
      r.value[pair_obj_id(a, cobj)] = spaces->at({a, cobj}).sset;
    }
  int cap = y.at(a_op->objects.front())->dim_cap();
  for (const Mor& m : index->morphisms) {
    auto [alpha, g] = split_pair_id(m.id);
    auto [a_src, c_src] = split_pair_id(m.src);
    auto [a_tgt, c_tgt] = split_pair_id(m.tgt);
    const MapSpace& src = spaces->at({a_src, c_src});
    const MapSpace& tgt = spaces->at({a_tgt, c_tgt});
    // alpha: a_src -> a_tgt in A^op, i.e. a_tgt -> a_src in A;
    // send h: Y(a_src)×Δ^q -> Z(c_src)  to  Z(g) ∘ h ∘ (Y(alpha)×id)
    SSetMap comp{src.sset, tgt.sset, {}};
    for (int q = 0; q <= cap; ++q)
      for (const auto& id : src.sset->nd(q)) {
        const SSetMap& h = src.map_of(q, id);
        SSetMap pre = product_map(tgt.cylinder.at(q), src.cylinder.at(q),
                                  y.act(alpha), identity_map(delta(q, cap)));
        SSetMap moved = compose(z.act(g), compose(h, pre));
        comp.assignment[id] = tgt.formal_of(q, moved);
      }
    r.action[m.id] = comp;
  }
  r.validate();
  return r;
}

bool tensor_adjunction_check(const Diagram& xx, const Diagram& y, const Diagram& z,
                             const CatPtr& c, long budget) {
  BiTensor bt = bi_tensor(xx, y, c);
  std::vector<DiagramMap> left = enumerate_diagram_maps(bt.diagram, z, budget);

  std::map<std::pair<std::string, std::string>, MapSpace> spaces;
  Diagram r = mapping_diagram(y, z, c, &spaces, budget);
  std::vector<DiagramMap> right = enumerate_diagram_maps(xx, r, budget);
  if (left.size() != right.size()) return false;

  CatPtr a_op = opposite(y.index);
  std::vector<bool> hit(right.size(), false);
  for (const DiagramMap& phi : left) {
    // canonical transpose: psi(a,c)(x) = [ (w,t) ↦ phi_c( [x·t, w] at summand a ) ]
    DiagramMap psi{xx, r, {}};
    for (const auto& a : a_op->objects)
      for (const auto& cobj : c->objects) {
        const MapSpace& ms = spaces.at({a, cobj});
        const TensorResult& tr = bt.at.at(cobj);
        const SSetPtr& val = xx.at(pair_obj_id(a, cobj));
        SSetMap comp{val, ms.sset, {}};
        for (int n = 0; n <= val->dim_cap(); ++n)
          for (const auto& xid : val->nd(n)) {
            SSetMap hx{ms.cylinder.at(n).sset, z.at(cobj), {}};
            SSetMap sum = tr.summand(a);
            for (const auto& [pid, comp_pair] : ms.cylinder.at(n).components) {
              FormalSimplex xt =
                  restrict_along(*val, val->formal(xid), comp_pair.second);
              FormalSimplex mid = tr.pairs.at(a).pair_formal(xt, comp_pair.first);
              hx.assignment[pid] = phi.at(cobj).apply(sum.apply(mid));
            }
            comp.assignment[xid] = ms.formal_of(n, hx);
          }
        psi.components[pair_obj_id(a, cobj)] = comp;
      }
    bool found = false;
    for (size_t i = 0; i < right.size(); ++i) {
      if (hit[i] || !(right[i].components == psi.components)) continue;
      hit[i] = true;
      found = true;
      break;
    }
    if (!found) return false;
  }
  return true;
}

} // namespace cathom
