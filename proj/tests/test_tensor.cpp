#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cathom/tensor.hpp"

using namespace cathom;

namespace {

constexpr int kCap = 3;

CatPtr interval_cat() {
  CatSpec s;
  s.objects = {"0", "1"};
  s.morphisms = {{"u", "0", "1"}};
  return make_category(s);
}

CatPtr terminal_cat() {
  CatSpec s;
  s.objects = {"*"};
  return make_category(s);
}

/// Y over the interval: delta(0) at 0, S0 at 1, u includes the point as "p".
Diagram y_interval(int cap = kCap) {
  auto c = interval_cat();
  auto pt = delta(0, cap);
  auto s0 = constant_sset({"p", "q"}, cap);
  Diagram y;
  y.index = c;
  y.value = {{"0", pt}, {"1", s0}};
  y.action["u"] = SSetMap{pt, s0, {{"0", s0->formal("p")}}};
  y.action["id_0"] = identity_map(pt);
  y.action["id_1"] = identity_map(s0);
  y.validate();
  return y;
}

/// The discrete representable mor_A(?, a0) as a diagram over A^op.
Diagram representable(const CatPtr& a, const std::string& a0, int cap = kCap) {
  Diagram x;
  x.index = opposite(a);
  for (const auto& b : a->objects) x.value[b] = constant_sset(a->hom(b, a0), cap);
  for (const Mor& m : a->morphisms) {
    // m: b -> b' in A acts mor(b', a0) -> mor(b, a0) by precomposition
    SSetMap act{x.value.at(m.tgt), x.value.at(m.src), {}};
    for (const auto& g : a->hom(m.tgt, a0))
      act.assignment[g] = x.value.at(m.src)->formal(a->compose(g, m.id));
    x.action[m.id] = act;
  }
  x.validate();
  return x;
}

} // namespace

TEST_CASE("tensor with the constant point computes the colimit") {
  Diagram y = y_interval();
  Diagram pt_diag = constant_diagram(opposite(y.index), delta(0, kCap));
  TensorResult t = tensor_over(pt_diag, y);
  ColimResult colim = colim_diagram(y);
  auto iso = iso_check(t.result, colim.sset);
  CHECK(iso.has_value());
  // interval colimit is Y(1) = S0
  CHECK(t.result->nd_count(0) == 2);
  CHECK(t.result->top_dim() == 0);
}

TEST_CASE("co-Yoneda: representable tensor collapses to the value") {
  auto a = interval_cat();
  Diagram y = y_interval();
  for (const std::string a0 : {"0", "1"}) {
    TensorResult t = tensor_over(representable(a, a0), y);
    auto iso = iso_check(t.result, y.at(a0));
    CHECK(iso.has_value());
  }
}

TEST_CASE("tensor rejects mismatched indices") {
  Diagram y = y_interval();
  Diagram wrong = constant_diagram(y.index, delta(0, kCap)); // not the opposite
  CHECK_THROWS_WITH_AS(tensor_over(wrong, y), doctest::Contains("IndexMismatch"),
                       Error);
}

TEST_CASE("quotient map coequalizes the structure maps on every generator") {
  Diagram y = y_interval();
  Diagram x = representable(interval_cat(), "1");
  TensorResult t = tensor_over(x, y);
  // check the defining relation [x·α, w] = [x, α·w] on the u-summand
  const auto& m = *interval_cat()->morphisms.begin();
  (void)m;
  ProductSSet pm = product(x.at("1"), y.at("0"));
  for (int n = 0; n <= kCap; ++n)
    for (const auto& id : pm.sset->nd(n)) {
      auto [fx, fy] = pm.components.at(id);
      FormalSimplex via_b =
          t.summand("0").apply(t.pairs.at("0").pair_formal(x.act("u").apply(fx), fy));
      FormalSimplex via_bp =
          t.summand("1").apply(t.pairs.at("1").pair_formal(fx, y.act("u").apply(fy)));
      CHECK(via_b == via_bp);
    }
}

TEST_CASE("bi-tensor over the terminal category is the plain tensor") {
  Diagram y = y_interval();
  auto term = terminal_cat();
  auto a_op = opposite(y.index);
  // XX over A^op × * with values of the representable at 1
  Diagram rep = representable(interval_cat(), "1");
  Diagram xx;
  xx.index = product(a_op, term);
  for (const auto& b : a_op->objects) xx.value[pair_obj_id(b, "*")] = rep.at(b);
  for (const Mor& m : xx.index->morphisms) {
    auto [f, g] = split_pair_id(m.id);
    (void)g;
    xx.action[m.id] = rep.act(f);
  }
  xx.validate();
  BiTensor bt = bi_tensor(xx, y, term);
  TensorResult t = tensor_over(rep, y);
  CHECK(*bt.diagram.at("*") == *t.result);
}

TEST_CASE("mapping spaces at small caps") {
  int cap = 2;
  auto pt = delta(0, cap);
  auto i = delta(1, cap);
  // Map(pt, Z) is Z itself
  MapSpace mz = map_space(pt, i);
  CHECK(iso_check(mz.sset, i).has_value());
  // Map(K, pt) is a point
  MapSpace mp = map_space(i, pt);
  CHECK(iso_check(mp.sset, pt).has_value());
  // Map(Δ1, Δ1) has the 3 monotone vertex-pair maps as vertices
  MapSpace mm = map_space(i, i);
  CHECK(mm.sset->nd_count(0) == 3);
}

TEST_CASE("tensor-mapping adjunction bijection on a small instance") {
  int cap = 2;
  auto a = interval_cat();
  auto term = terminal_cat();
  Diagram y = y_interval(cap);
  Diagram rep = representable(a, "1", cap);
  auto a_op = opposite(a);
  Diagram xx;
  xx.index = product(a_op, term);
  for (const auto& b : a_op->objects) xx.value[pair_obj_id(b, "*")] = rep.at(b);
  for (const Mor& m : xx.index->morphisms)
    xx.action[m.id] = rep.act(split_pair_id(m.id).first);
  Diagram z = constant_diagram(term, y.at("1")); // S0 as a diagram over *

  CHECK(tensor_adjunction_check(xx, y, z, term));
}
