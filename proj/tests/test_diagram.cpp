#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cathom/diagram.hpp"
#include "cathom/homology.hpp"

using namespace cathom;

namespace {

constexpr int kCap = 4;

CatPtr span_cat() {
  CatSpec s;
  s.objects = {"a", "b", "c"};
  s.morphisms = {{"f", "b", "a"}, {"g", "b", "c"}};
  return make_category(s);
}

CatPtr terminal_cat() {
  CatSpec s;
  s.objects = {"*"};
  return make_category(s);
}

SSetPtr s0() { return constant_sset({"p", "q"}, kCap); }

/// pt <- S0 -> pt over the span
Diagram s0_diagram() {
  auto c = span_cat();
  auto pt = delta(0, kCap);
  Diagram x;
  x.index = c;
  x.value = {{"a", pt}, {"b", s0()}, {"c", pt}};
  SSetMap collapse{s0(), pt, {{"p", pt->formal("0")}, {"q", pt->formal("0")}}};
  x.action["f"] = collapse;
  x.action["g"] = collapse;
  for (const auto& o : c->objects) x.action[c->identity(o)] = identity_map(x.value[o]);
  x.validate();
  return x;
}

} // namespace

TEST_CASE("constant diagrams validate and collapse under colim") {
  auto c = span_cat();
  auto pt = delta(0, kCap);
  Diagram x = constant_diagram(c, pt);
  CHECK_NOTHROW(x.validate());
  ColimResult r = colim_diagram(x);
  // span is connected, so the colimit of the constant point diagram is a point
  CHECK(r.sset->nd_count(0) == 1);
  CHECK(r.sset->top_dim() == 0);
  for (const auto& [o, leg] : r.legs) CHECK_NOTHROW(leg.validate());
}

TEST_CASE("functoriality violations are caught") {
  auto c = span_cat();
  Diagram x = s0_diagram();
  x.action["f"].assignment["p"] = FormalSimplex{{}, "0", 0}; // still fine
  CHECK_NOTHROW(x.validate());
  // identity action replaced by a non-identity: swap on S0
  Diagram y = s0_diagram();
  y.action[c->identity("b")].assignment["p"] = FormalSimplex{{}, "q", 0};
  y.action[c->identity("b")].assignment["q"] = FormalSimplex{{}, "p", 0};
  CHECK_THROWS_AS(y.validate(), Error);
}

TEST_CASE("colim of the S0 span diagram is a single point") {
  // both points of S0 get identified with the images in the two endpoints;
  // the two endpoint points end up glued through the S0 components
  Diagram x = s0_diagram();
  ColimResult r = colim_diagram(x);
  CHECK(r.sset->nd_count(0) == 1);
  // cocone commutes: leg_a ∘ X(f) == leg_b
  CHECK(compose(r.legs.at("a"), x.act("f")) == r.legs.at("b"));
}

TEST_CASE("colim over the terminal category is the value") {
  Diagram x = constant_diagram(terminal_cat(), s0());
  ColimResult r = colim_diagram(x);
  CHECK(iso_check(r.sset, s0()).has_value());
}

TEST_CASE("restriction") {
  Diagram x = s0_diagram();
  Diagram y = restrict_diagram(x, {"a", "c"});
  CHECK(y.index->objects == std::vector<std::string>{"a", "c"});
  CHECK(y.index->morphisms.size() == 2);
  CHECK_NOTHROW(y.validate());
  Diagram all = restrict_diagram(x, {"a", "b", "c"});
  CHECK(all.value.at("b") == x.value.at("b"));
}

TEST_CASE("induction along a full subcategory") {
  Diagram x = s0_diagram();
  Diagram y = restrict_diagram(x, {"a", "c"});
  InducedDiagram ind = induce(y, x.index);
  // empty comma slice at b: no arrows a->b or c->b
  CHECK(ind.diagram.at("b")->top_dim() == -1);
  // at a and c the slice has a terminal object, so ind(res X) matches X
  CHECK(iso_check(ind.diagram.at("a"), x.at("a")).has_value());
  CHECK(iso_check(ind.diagram.at("c"), x.at("c")).has_value());

  // induce then restrict recovers the diagram up to isomorphism at each d
  DiagramMap eta = adjunction_unit(y, ind);
  CHECK_NOTHROW(eta.validate());
  for (const auto& d : y.index->objects)
    CHECK(invert_map(eta.at(d)).has_value());
}

TEST_CASE("induction along the identity inclusion is the identity") {
  Diagram x = s0_diagram();
  InducedDiagram ind = induce(x, x.index);
  for (const auto& o : x.index->objects)
    CHECK(iso_check(ind.diagram.at(o), x.at(o)).has_value());
}

TEST_CASE("counit of the adjunction") {
  Diagram x = s0_diagram();
  CounitResult c = counit(x, {"a", "c"});
  CHECK_NOTHROW(c.eps.validate());
  // on D the counit is an isomorphism
  CHECK(invert_map(c.eps.at("a")).has_value());
  CHECK(invert_map(c.eps.at("c")).has_value());
  // at b it is the inclusion of the empty simplicial set
  CHECK(c.eps.at("b").source->top_dim() == -1);

  CounitResult full = counit(x, {"a", "b", "c"});
  for (const auto& o : x.index->objects)
    CHECK(invert_map(full.eps.at(o)).has_value());
}

TEST_CASE("objectwise homology equivalence") {
  Diagram x = s0_diagram();
  CHECK(is_objectwise_homology_equivalence(identity_diagram_map(x), {"a", "b", "c"}, 2));
  CounitResult c = counit(x, {"a", "c"});
  CHECK(is_objectwise_homology_equivalence(c.eps, {"a", "c"}, 2));
  CHECK_FALSE(is_objectwise_homology_equivalence(c.eps, {"a", "b", "c"}, 2));
}

TEST_CASE("diagram map enumeration and the ind/res adjunction bijection") {
  auto c = span_cat();
  auto pt = delta(0, kCap);
  Diagram p = constant_diagram(c, pt);
  Diagram x = s0_diagram();
  // maps point-diagram -> X: choose a point in each value compatibly; the
  // component at b forces both endpoints
  auto maps = enumerate_diagram_maps(p, x, 100000);
  CHECK(maps.size() == 2);
  for (const auto& m : maps) CHECK_NOTHROW(m.validate());

  Diagram y = restrict_diagram(x, {"a", "c"});
  CHECK(ind_res_adjunction_check(y, x, {"a", "c"}, 2000000));
  CHECK(ind_res_adjunction_check(restrict_diagram(p, {"a", "c"}), x, {"a", "c"},
                                 2000000));
}
