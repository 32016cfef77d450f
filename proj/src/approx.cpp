#include "cathom/approx.hpp"

#include <algorithm>

namespace cathom {

namespace {

std::vector<int> full_word(int n) {
  std::vector<int> w;
  for (int j = n - 1; j >= 0; --j) w.push_back(j);
  return w;
}

FormalSimplex thick_vertex(const std::string& v, int n) {
  return FormalSimplex{full_word(n), v, 0};
}

/// Morphism id of comma/slice categories, verified to exist.
std::string arrow_in(const FinCat& cat, const std::string& src,
                     const std::string& beta, const std::string& tgt) {
  std::string id = src + "-" + beta + ">" + tgt;
  if (!cat.has_morphism(id))
    fail("UnknownObject", "no arrow '" + id + "' in the derived category");
  return id;
}

const std::string& comma_object_id(const CommaCat& cc, const std::string& alpha,
                                   const std::string& gamma) {
  for (const auto& [id, t] : cc.label)
    if (t.alpha == alpha && t.gamma == gamma) return id;
  fail("UnknownObject", "no factorization (" + alpha + ", " + gamma + ")");
}

void check_value_caps(const Diagram& x, int dim_cap) {
  for (const auto& o : x.index->objects)
    if (x.at(o)->dim_cap() != dim_cap)
      fail("CapExceeded", "diagram value at '" + o +
                              "' is not built at the construction cap " +
                              std::to_string(dim_cap));
}

} // namespace

RelativePair relative_pair(const CatPtr& c, const std::set<std::string>& d_objs) {
  if (d_objs.empty())
    fail("UnknownObject", "the full subcategory needs at least one object");
  RelativePair p;
  p.c = c;
  p.d_objs = d_objs;
  p.d = full_subcategory(c, d_objs).cat;
  p.d_op = opposite(p.d);
  p.index = product(p.d_op, c);
  return p;
}

Diagram hom_diagram(const RelativePair& p, int dim_cap) {
  Diagram f;
  f.index = p.index;
  for (const auto& pid : p.index->objects) {
    auto [d, cobj] = split_pair_id(pid);
    f.value[pid] = constant_sset(p.c->hom(d, cobj), dim_cap);
  }
  for (const Mor& m : p.index->morphisms) {
    auto [del, g] = split_pair_id(m.id); // del: d' -> d in D, g: c -> c' in C
    auto [d, cobj] = split_pair_id(m.src);
    SSetMap a{f.value.at(m.src), f.value.at(m.tgt), {}};
    for (const auto& phi : p.c->hom(d, cobj))
      a.assignment[phi] =
          FormalSimplex{{}, p.c->compose(p.c->compose(g, phi), del), 0};
    f.action[m.id] = a;
  }
  f.validate();
  return f;
}

ApproxBundle build_approx(const RelativePair& p, bool op_variant, int dim_cap) {
  ApproxBundle b;
  b.pair = p;
  b.op_variant = op_variant;
  b.dim_cap = dim_cap;
  b.f = hom_diagram(p, dim_cap);

  Diagram e;
  e.index = p.index;
  for (const auto& pid : p.index->objects) {
    auto [d, cobj] = split_pair_id(pid);
    CommaCat cc = comma_double(p.c, p.d_objs, d, cobj);
    CatPtr ncat = op_variant ? opposite(cc.cat) : cc.cat;
    b.nerve[pid] = nerve(ncat, dim_cap);
    b.nerve_cat[pid] = ncat;
    b.comma[pid] = std::move(cc);
    e.value[pid] = b.nerve.at(pid).sset;
  }
  for (const Mor& m : p.index->morphisms) {
    auto [del, g] = split_pair_id(m.id);
    const CommaCat& src = b.comma.at(m.src);
    const CommaCat& tgt = b.comma.at(m.tgt);
    CatFunctor phi{src.cat, tgt.cat, {}, {}};
    for (const auto& [oid, t] : src.label)
      phi.on_objects[oid] = comma_object_id(tgt, p.c->compose(t.alpha, del),
                                            p.c->compose(g, t.gamma));
    for (const Mor& mm : src.cat->morphisms)
      phi.on_morphisms[mm.id] =
          arrow_in(*tgt.cat, phi.on_objects.at(mm.src), src.beta.at(mm.id),
                   phi.on_objects.at(mm.tgt));
    phi.validate();
    if (op_variant) phi = opposite_functor(phi);
    e.action[m.id] = nerve_of_functor(phi, b.nerve.at(m.src), b.nerve.at(m.tgt));
  }
  e.validate();
  b.e = e;

  DiagramMap theta{b.e, b.f, {}};
  for (const auto& pid : p.index->objects) {
    const NerveSSet& ns = b.nerve.at(pid);
    const CommaCat& cc = b.comma.at(pid);
    SSetMap comp{b.e.at(pid), b.f.at(pid), {}};
    for (int n = 0; n <= dim_cap; ++n)
      for (const auto& id : ns.sset->nd(n)) {
        Chain ch = ns.chain_of(ns.sset->formal(id));
        const CommaObject& t = cc.label.at(ch.obj0);
        comp.assignment[id] =
            thick_vertex(p.c->compose(t.gamma, t.alpha), n);
      }
    theta.components[pid] = comp;
  }
  theta.validate();
  b.theta = theta;
  return b;
}

ThetaReport verify_theta_we(const ApproxBundle& b, const std::string& d,
                            const std::string& cobj, int up_to) {
  if (up_to + 1 > b.dim_cap)
    fail("CapExceeded", "fiber homology to degree " + std::to_string(up_to) +
                            " needs cap at least " + std::to_string(up_to + 1));
  ThetaReport r;
  const std::string pid = pair_obj_id(d, cobj);
  const CommaCat& cc = b.comma.at(pid);
  const CatPtr& ncat = b.nerve_cat.at(pid);
  const NerveSSet& ns = b.nerve.at(pid);
  const SSetMap& th = b.theta.at(pid);
  const std::vector<std::string> hom = b.pair.c->hom(d, cobj);
  auto composite = [&](const std::string& oid) {
    const CommaObject& t = cc.label.at(oid);
    return b.pair.c->compose(t.gamma, t.alpha);
  };

  // (1) path components of E(d,c) biject with mor(d,c) through theta
  std::map<std::string, std::string> comp = pi0(*ns.sset);
  std::map<std::string, std::string> to_hom; // component rep -> hom element
  r.pi0_bijective = true;
  for (const auto& [v, rep] : comp) to_hom[rep] = th.apply(ns.sset->formal(v)).base;
  std::set<std::string> hit;
  for (const auto& [rep, phi] : to_hom)
    if (!hit.insert(phi).second) {
      r.pi0_bijective = false;
      r.witness = "two components collapse onto '" + phi + "'";
    }
  for (const auto& phi : hom)
    if (!hit.count(phi)) {
      r.pi0_bijective = false;
      r.witness = "no component over '" + phi + "'";
    }
  if (hit.size() != to_hom.size() && r.witness.empty()) r.pi0_bijective = false;

  // (2) each fiber is connected and acyclic up to up_to
  r.fibers_acyclic = true;
  for (const auto& phi : hom) {
    std::set<std::string> objs;
    for (const auto& [oid, t] : cc.label)
      if (composite(oid) == phi) objs.insert(oid);
    NerveSSet fib = nerve(full_subcategory(ncat, objs).cat, up_to + 1);
    std::vector<HomologyGroup> h = homology(*fib.sset, up_to);
    bool good = h[0].betti == 1 && h[0].torsion.empty();
    for (int n = 1; n <= up_to; ++n) good = good && h[size_t(n)].is_trivial();
    if (!good) {
      r.fibers_acyclic = false;
      r.witness = "fiber over '" + phi + "' is not acyclic";
    }
  }

  // (3) composition and pre-insert-identity functors between E(d,c) and the
  // discrete category on mor(d,c); exact retraction on nerves
  CatSpec ds;
  ds.objects = hom;
  CatPtr dh = make_category(ds);
  CatFunctor piF{ncat, dh, {}, {}};
  for (const auto& o : ncat->objects) piF.on_objects[o] = composite(o);
  for (const Mor& m : ncat->morphisms)
    piF.on_morphisms[m.id] = dh->identity(piF.on_objects.at(m.src));
  piF.validate();
  CatFunctor iota{dh, ncat, {}, {}};
  for (const auto& phi : hom) {
    const std::string& o = comma_object_id(cc, b.pair.c->identity(d), phi);
    iota.on_objects[phi] = o;
    iota.on_morphisms[dh->identity(phi)] = ncat->identity(o);
  }
  iota.validate();
  NerveSSet ndh = nerve(dh, b.dim_cap);
  r.retraction_identity =
      compose(nerve_of_functor(piF, ns, ndh), nerve_of_functor(iota, ndh, ns)) ==
      identity_map(ndh.sset);
  if (!r.retraction_identity && r.witness.empty())
    r.witness = "retraction is not the identity at (" + d + ", " + cobj + ")";

  // (4) prism homotopy between iota∘pi and the identity, from the natural
  // transformation whose component at (alpha, gamma) is alpha
  CatFunctor ip = compose(iota, piF);
  CatNatTrans nu;
  if (b.op_variant) {
    nu.source = identity_functor(ncat);
    nu.target = ip;
  } else {
    nu.source = ip;
    nu.target = identity_functor(ncat);
  }
  for (const auto& o : ncat->objects)
    // ids are shared with the plain comma category, where the arrow runs
    // iota(pi(o)) -> o with underlying morphism alpha
    nu.components[o] = arrow_in(*cc.cat, ip.obj(o), cc.label.at(o).alpha, o);
  nu.validate();
  NatTransHomotopy hmt = homotopy_from_nat_trans(nu, ns, ns);
  hmt.h.validate();
  r.prism_ok = compose(hmt.h, hmt.end0) == nerve_of_functor(nu.source, ns, ns) &&
               compose(hmt.h, hmt.end1) == nerve_of_functor(nu.target, ns, ns);
  if (!r.prism_ok && r.witness.empty())
    r.witness = "prism endpoints are wrong at (" + d + ", " + cobj + ")";
  return r;
}

LambdaIso lambda_iso(const RelativePair& p, const Diagram& x, int dim_cap) {
  if (!(*x.index == *p.d))
    fail("IndexMismatch", "input must be a diagram over the full subcategory");
  check_value_caps(x, dim_cap);
  LambdaIso L;
  L.bt = bi_tensor(hom_diagram(p, dim_cap), x, p.c);
  L.ind = induce(x, p.c);

  DiagramMap fwd{L.bt.diagram, L.ind.diagram, {}};
  for (const auto& cobj : p.c->objects) {
    const TensorResult& t = L.bt.at.at(cobj);
    std::vector<SSetMap> legs;
    for (const auto& dobj : t.objects) {
      const ProductSSet& pr = t.pairs.at(dobj);
      SSetMap leg{pr.sset, L.ind.diagram.at(cobj), {}};
      for (int n = 0; n <= dim_cap; ++n)
        for (const auto& g : pr.sset->nd(n)) {
          const auto& [fphi, w] = pr.components.at(g);
          leg.assignment[g] = L.ind.leg(cobj, dobj, fphi.base).apply(w);
        }
      legs.push_back(std::move(leg));
    }
    fwd.components[cobj] = induced_map(t.coeq, coproduct_map(t.middle, legs));
  }
  fwd.validate();

  DiagramMap bwd{L.ind.diagram, L.bt.diagram, {}};
  for (const auto& cobj : p.c->objects) {
    const TensorResult& t = L.bt.at.at(cobj);
    const SliceCat& sl = L.ind.slices.at(cobj);
    std::map<std::string, SSetMap> cocone;
    for (const auto& [sid, so] : sl.label) {
      const ProductSSet& pr = t.pairs.at(so.obj);
      SSetMap inj = t.summand(so.obj);
      SSetMap leg{x.at(so.obj), t.result, {}};
      for (int n = 0; n <= dim_cap; ++n)
        for (const auto& w : x.at(so.obj)->nd(n))
          leg.assignment[w] = inj.apply(
              pr.pair_formal(thick_vertex(so.arrow, n), x.at(so.obj)->formal(w)));
      cocone[sid] = std::move(leg);
    }
    bwd.components[cobj] = colim_induced(L.ind.colims.at(cobj), cocone, t.result);
  }
  bwd.validate();

  if (!(compose(fwd, bwd) == identity_diagram_map(L.ind.diagram)) ||
      !(compose(bwd, fwd) == identity_diagram_map(L.bt.diagram)))
    fail("ComparisonFailed",
         "tensor-to-induction comparison failed to invert");
  L.forward = std::move(fwd);
  L.backward = std::move(bwd);
  return L;
}

BarApprox bar_approx(const Diagram& x, const RelativePair& p, bool op_variant,
                     int dim_cap) {
  if (!(*x.index == *p.c))
    fail("IndexMismatch", "diagram must be indexed by the ambient category");
  check_value_caps(x, dim_cap);
  BarApprox out;
  out.bundle = build_approx(p, op_variant, dim_cap);
  out.res_x = restrict_diagram(x, p.d_objs);
  BiTensorMap btm = bi_tensor_map(out.bundle.theta, out.res_x, p.c);
  out.qbar = btm.source;
  out.theta_tensor = btm.map;
  out.lambda = lambda_iso(p, out.res_x, dim_cap);
  out.eps = counit(x, p.d_objs);
  out.xi = compose(out.eps.eps, compose(out.lambda.forward, out.theta_tensor));
  out.xi.validate();
  return out;
}

HocolimResult hocolim(const Diagram& x, int dim_cap) {
  check_value_caps(x, dim_cap);
  const CatPtr& c = x.index;
  std::set<std::string> all(c->objects.begin(), c->objects.end());
  HocolimResult out;
  Diagram w;
  w.index = opposite(c);
  for (const auto& a : c->objects) {
    SliceCat sl = comma_under(c, all, a);
    out.nerve[a] = nerve(opposite(sl.cat), dim_cap);
    out.under[a] = std::move(sl);
    w.value[a] = out.nerve.at(a).sset;
  }
  for (const Mor& m : c->morphisms) { // m: a -> a' in C gives a'↘C -> a↘C
    const SliceCat& src = out.under.at(m.tgt);
    const SliceCat& tgt = out.under.at(m.src);
    CatFunctor g{src.cat, tgt.cat, {}, {}};
    for (const auto& [oid, so] : src.label)
      g.on_objects[oid] = tgt.object_id(so.obj, c->compose(so.arrow, m.id));
    for (const Mor& mm : src.cat->morphisms)
      g.on_morphisms[mm.id] = arrow_in(*tgt.cat, g.on_objects.at(mm.src),
                                       src.beta.at(mm.id), g.on_objects.at(mm.tgt));
    g.validate();
    w.action[m.id] =
        nerve_of_functor(opposite_functor(g), out.nerve.at(m.tgt), out.nerve.at(m.src));
  }
  w.validate();
  out.weights = std::move(w);
  out.tensor = tensor_over(out.weights, x);
  out.sset = out.tensor.result;
  out.colim = colim_diagram(x);
  std::vector<SSetMap> legs;
  for (const auto& a : out.tensor.objects)
    legs.push_back(
        compose(out.colim.legs.at(a), product_proj_right(out.tensor.pairs.at(a))));
  out.to_colim =
      induced_map(out.tensor.coeq, coproduct_map(out.tensor.middle, legs));
  return out;
}

LcolimResult lcolim(const Diagram& x, bool op_variant, int dim_cap) {
  std::set<std::string> all(x.index->objects.begin(), x.index->objects.end());
  LcolimResult out;
  out.bar = bar_approx(x, relative_pair(x.index, all), op_variant, dim_cap);
  out.colim = colim_diagram(out.bar.qbar.diagram);
  out.sset = out.colim.sset;
  out.colim_x = colim_diagram(x);
  out.xi_colim = colim_map(out.colim, out.colim_x, out.bar.xi);
  return out;
}

Thm62Report thm62_compare(const Diagram& x, int dim_cap) {
  Thm62Report r{hocolim(x, dim_cap), lcolim(x, /*op_variant=*/true, dim_cap),
                {}, std::nullopt, false};
  const CatPtr& c = x.index;
  std::map<std::string, SSetMap> cocone;
  for (const auto& cobj : c->objects) {
    const TensorResult& t = r.l.bar.qbar.at.at(cobj);
    std::vector<SSetMap> legs;
    for (const auto& dobj : t.objects) {
      const std::string pid = pair_obj_id(dobj, cobj);
      const CommaCat& cc = r.l.bar.bundle.comma.at(pid);
      const SliceCat& sl = r.ho.under.at(dobj);
      // forget the second comma leg: d↘C↘c -> d↘C
      CatFunctor pr{cc.cat, sl.cat, {}, {}};
      for (const auto& [oid, tr] : cc.label)
        pr.on_objects[oid] = sl.object_id(tr.mid, tr.alpha);
      for (const Mor& mm : cc.cat->morphisms)
        pr.on_morphisms[mm.id] = arrow_in(*sl.cat, pr.on_objects.at(mm.src),
                                          cc.beta.at(mm.id), pr.on_objects.at(mm.tgt));
      pr.validate();
      SSetMap pn = nerve_of_functor(opposite_functor(pr),
                                    r.l.bar.bundle.nerve.at(pid), r.ho.nerve.at(dobj));
      SSetMap pm = product_map(t.pairs.at(dobj), r.ho.tensor.pairs.at(dobj), pn,
                               identity_map(x.at(dobj)));
      legs.push_back(compose(r.ho.tensor.summand(dobj), pm));
    }
    cocone[cobj] = induced_map(t.coeq, coproduct_map(t.middle, legs));
  }
  r.forward = colim_induced(r.l.colim, cocone, r.ho.sset);
  r.backward = invert_map(r.forward);
  r.triangle_ok = compose(r.ho.to_colim, r.forward) == r.l.xi_colim;
  return r;
}

NatVariantReport hocolim_nat_variant_compare(const Diagram& x, int dim_cap,
                                             int up_to) {
  if (up_to + 1 > dim_cap)
    fail("CapExceeded", "homology to degree " + std::to_string(up_to) +
                            " needs cap at least " + std::to_string(up_to + 1));
  NatVariantReport r;
  LcolimResult l = lcolim(x, /*op_variant=*/false, dim_cap);
  HocolimResult h = hocolim(x, dim_cap);
  r.lcolim_nat = homology(*l.sset, up_to);
  r.hocolim_h = homology(*h.sset, up_to);
  r.equal = r.lcolim_nat == r.hocolim_h;
  return r;
}

} // namespace cathom
