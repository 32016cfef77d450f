#include "cathom/suites.hpp"

#include <algorithm>
#include <functional>

#include "cathom/approx.hpp"

namespace cathom {

namespace {

template <typename F>
void add_check(SuiteReport& r, const std::string& id, F&& body) {
  Check c{id, false, {}};
  try {
    c.witness = body(); // empty witness means pass
    c.pass = c.witness.empty();
  } catch (const Error& e) {
    c.witness = e.what();
  }
  r.checks.push_back(std::move(c));
}

SSetPtr circle_sset(int cap) {
  auto k = std::make_shared<SSet>(cap);
  k->add_simplex("v", 0);
  k->add_simplex("e", 1, {k->formal("v"), k->formal("v")});
  k->validate();
  return k;
}

SuiteReport suite_skeleton(int cap, long budget) {
  SuiteReport r{"skeleton", {}};
  std::vector<std::pair<std::string, SSetPtr>> shapes = {
      {"delta2", delta(2, cap)},
      {"boundary-delta2", boundary_delta(2, cap)},
      {"circle", circle_sset(cap)},
      {"nerve-square", nerve(corpus_category("square"), cap).sset}};
  for (const auto& [name, k] : shapes) {
    for (int n = 1; n <= k->top_dim(); ++n)
      add_check(r, "skeleton/" + name + "/level-" + std::to_string(n),
                [&, n, kk = k] {
                  return skeleton_pushout_check(kk, n, budget)
                             ? std::string{}
                             : "pushout reconstruction differs at level " +
                                   std::to_string(n);
                });
    add_check(r, "skeleton/" + name + "/exhausts", [kk = k] {
      return *skeleton(kk, kk->top_dim()).sset == *kk
                 ? std::string{}
                 : std::string("top skeleton differs from the whole");
    });
  }
  return r;
}

SuiteReport suite_theta(int cap, long /*budget*/) {
  SuiteReport r{"theta", {}};
  int up_to = std::min(3, cap - 1);
  for (const CorpusPair& cp : corpus_pairs()) {
    RelativePair p = relative_pair(cp.c, cp.d_objs);
    for (bool op : {true, false}) {
      ApproxBundle b = build_approx(p, op, cap);
      const std::string variant = op ? "op" : "nat";
      for (const auto& d : p.d->objects)
        for (const auto& c : p.c->objects)
          add_check(r,
                    "theta/" + cp.name + "/" + variant + "/" + d + "->" + c,
                    [&] {
                      ThetaReport t = verify_theta_we(b, d, c, up_to);
                      return t.ok() ? std::string{} : t.witness;
                    });
    }
  }
  return r;
}

SuiteReport suite_lambda(int cap, long budget) {
  SuiteReport r{"lambda", {}};
  for (const CorpusPair& cp : corpus_pairs()) {
    RelativePair p = relative_pair(cp.c, cp.d_objs);
    bool full = cp.d_objs.size() == cp.c->objects.size();
    for (const auto& [dname, x] : corpus_diagrams(p.d, cap)) {
      add_check(r, "lambda/" + cp.name + "/" + dname, [&] {
        LambdaIso L = lambda_iso(p, x, cap); // inverse verified inside
        if (full)
          for (const auto& o : p.c->objects)
            if (!iso_check(L.bt.diagram.at(o), x.at(o), budget))
              return "tensor value differs from the diagram at '" + o + "'";
        return std::string{};
      });
    }
  }
  return r;
}

SuiteReport suite_adjunction(int /*cap*/, long budget) {
  SuiteReport r{"adjunction", {}};
  const int cap = 2; // enumeration scale
  for (const CorpusPair& cp : corpus_pairs()) {
    RelativePair p = relative_pair(cp.c, cp.d_objs);
    auto ys = corpus_diagrams(p.d, cap);
    auto zs = corpus_diagrams(p.c, cap);
    for (const auto& yname : {"point", "mixed"})
      for (const auto& zname : {"point", "s0"}) {
        const Diagram* y = nullptr;
        const Diagram* z = nullptr;
        for (const auto& [n, d] : ys)
          if (n == yname) y = &d;
        for (const auto& [n, d] : zs)
          if (n == zname) z = &d;
        add_check(r,
                  "adjunction/ind-res/" + cp.name + "/" + yname + "->" + zname,
                  [&] {
                    return ind_res_adjunction_check(*y, *z, cp.d_objs, budget)
                               ? std::string{}
                               : std::string("transpose is not a bijection");
                  });
      }
  }
  // tensor ⊣ mapping-space on interval-shaped instances over the terminal
  auto a = corpus_category("interval");
  auto term = corpus_category("terminal");
  auto a_op = opposite(a);
  SSetPtr pt = delta(0, cap);
  SSetPtr s0 = constant_sset({"p", "q"}, cap);
  Diagram y;
  y.index = a;
  y.value = {{"0", pt}, {"1", s0}};
  y.action = {{"u", SSetMap{pt, s0, {{"0", s0->formal("p")}}}},
              {"id_0", identity_map(pt)},
              {"id_1", identity_map(s0)}};
  y.validate();
  Diagram rep; // discrete representable at 1, over A^op
  rep.index = a_op;
  rep.value = {{"0", constant_sset(a->hom("0", "1"), cap)},
               {"1", constant_sset(a->hom("1", "1"), cap)}};
  rep.action = {{"id_0", identity_map(rep.value.at("0"))},
                {"id_1", identity_map(rep.value.at("1"))},
                {"u", SSetMap{rep.value.at("1"), rep.value.at("0"),
                              {{"id_1", rep.value.at("0")->formal("u")}}}}};
  rep.validate();
  Diagram xx;
  xx.index = product(a_op, term);
  for (const auto& b : a_op->objects) xx.value[pair_obj_id(b, "*")] = rep.at(b);
  for (const Mor& m : xx.index->morphisms)
    xx.action[m.id] = rep.act(split_pair_id(m.id).first);
  xx.validate();
  for (const auto& [zname, zval] : {std::pair<std::string, SSetPtr>{"s0", s0},
                                    {"point", pt}}) {
    Diagram z = constant_diagram(term, zval);
    add_check(r, "adjunction/tensor-map/interval/" + zname, [&] {
      return tensor_adjunction_check(xx, y, z, term, budget)
                 ? std::string{}
                 : std::string("transpose is not a bijection");
    });
  }
  return r;
}

SuiteReport suite_thm62(int cap, long /*budget*/) {
  SuiteReport r{"thm62", {}};
  for (const auto& cname : corpus_category_names()) {
    CatPtr c = corpus_category(cname);
    for (const auto& [dname, x] : corpus_diagrams(c, cap))
      add_check(r, "thm62/" + cname + "/" + dname, [&] {
        Thm62Report t = thm62_compare(x, cap);
        if (!t.backward) return std::string("comparison map is not invertible");
        if (!t.triangle_ok) return std::string("triangle over the colimit fails");
        return std::string{};
      });
  }
  return r;
}

SuiteReport suite_nat_variant(int cap, long /*budget*/) {
  SuiteReport r{"nat-variant", {}};
  int up_to = std::min(3, cap - 1);
  for (const auto& cname : corpus_category_names()) {
    CatPtr c = corpus_category(cname);
    for (const auto& [dname, x] : corpus_diagrams(c, cap))
      add_check(r, "nat-variant/" + cname + "/" + dname, [&] {
        NatVariantReport n = hocolim_nat_variant_compare(x, cap, up_to);
        if (!n.equal) return std::string("homology differs between variants");
        return std::string{};
      });
  }
  return r;
}

} // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::vector<std::string> suite_names() {
  return {"skeleton", "theta", "lambda", "adjunction", "thm62", "nat-variant",
          "all"};
}

SuiteReport run_suite(const std::string& name, int dim_cap, long budget) {
  static const std::map<std::string,
                        std::function<SuiteReport(int, long)>>
      table = {{"skeleton", suite_skeleton},   {"theta", suite_theta},
               {"lambda", suite_lambda},       {"adjunction", suite_adjunction},
               {"thm62", suite_thm62},         {"nat-variant", suite_nat_variant}};
  SuiteReport out{name, {}};
  if (name == "all") {
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      SuiteReport r = run_suite(n, dim_cap, budget);
      out.checks.insert(out.checks.end(), r.checks.begin(), r.checks.end());
    }
  } else {
    auto it = table.find(name);
    if (it == table.end()) fail("ParseError", "unknown suite '" + name + "'");
    out = it->second(dim_cap, budget);
  }
  std::sort(out.checks.begin(), out.checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

} // namespace cathom
