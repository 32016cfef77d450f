#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cathom/approx.hpp"

using namespace cathom;

namespace {

constexpr int kCap = 3;

CatPtr terminal_cat() {
  CatSpec s;
  s.objects = {"*"};
  return make_category(s);
}

CatPtr interval_cat() {
  CatSpec s;
  s.objects = {"0", "1"};
  s.morphisms = {{"u", "0", "1"}};
  return make_category(s);
}

/// a <-f- b -g-> c
CatPtr span_cat() {
  CatSpec s;
  s.objects = {"a", "b", "c"};
  s.morphisms = {{"f", "b", "a"}, {"g", "b", "c"}};
  return make_category(s);
}

Diagram point_diagram(const CatPtr& c, int cap = kCap) {
  return constant_diagram(c, delta(0, cap));
}

/// pt <- S0 -> pt over the span.
Diagram s0_span(int cap = kCap) {
  auto c = span_cat();
  auto pt = delta(0, cap);
  auto s0 = constant_sset({"p", "q"}, cap);
  Diagram x;
  x.index = c;
  x.value = {{"a", pt}, {"b", s0}, {"c", pt}};
  SSetMap collapse{s0, pt, {{"p", pt->formal("0")}, {"q", pt->formal("0")}}};
  x.action = {{"f", collapse},
              {"g", collapse},
              {"id_a", identity_map(pt)},
              {"id_b", identity_map(s0)},
              {"id_c", identity_map(pt)}};
  x.validate();
  return x;
}

std::vector<HomologyGroup> groups(std::vector<long> betti) {
  std::vector<HomologyGroup> out;
  for (size_t i = 0; i < betti.size(); ++i)
    out.push_back({static_cast<int>(i), betti[i], {}});
  return out;
}

} // namespace

TEST_CASE("hom diagram of the interval counts morphisms") {
  auto c = interval_cat();
  RelativePair p = relative_pair(c, {"0", "1"});
  Diagram f = hom_diagram(p, kCap);
  CHECK(f.at(pair_obj_id("0", "0"))->nd_count(0) == 1);
  CHECK(f.at(pair_obj_id("0", "1"))->nd_count(0) == 1);
  CHECK(f.at(pair_obj_id("1", "0"))->nd_count(0) == 0);
  CHECK(f.at(pair_obj_id("1", "1"))->nd_count(0) == 1);
}

TEST_CASE("inducing the absolute hom diagram recovers the relative one") {
  auto c = span_cat();
  RelativePair p = relative_pair(c, {"a", "c"});
  Diagram f = hom_diagram(p, kCap);
  std::set<std::string> dd;
  for (const auto& d : p.d->objects)
    for (const auto& d2 : p.d->objects) dd.insert(pair_obj_id(d, d2));
  InducedDiagram ind = induce(restrict_diagram(f, dd), p.index);
  for (const auto& pid : p.index->objects)
    CHECK(iso_check(ind.diagram.at(pid), f.at(pid)).has_value());
}

TEST_CASE("comma nerves of the interval take the expected shapes") {
  auto c = interval_cat();
  RelativePair p = relative_pair(c, {"0", "1"});
  ApproxBundle b = build_approx(p, /*op_variant=*/true, kCap);
  // 0 -> D -> 1 has the two factorizations of u, joined by one arrow
  const SSetPtr& e01 = b.e.at(pair_obj_id("0", "1"));
  CHECK(e01->nd_count(0) == 2);
  CHECK(e01->nd_count(1) == 1);
  CHECK(e01->nd_count(2) == 0);
  CHECK(iso_check(e01, delta(1, kCap)).has_value());
  // no maps 1 -> 0, so the comma is empty
  CHECK(b.e.at(pair_obj_id("1", "0"))->top_dim() == -1);
  // theta collapses both factorizations onto u
  const SSetMap& th = b.theta.at(pair_obj_id("0", "1"));
  for (const auto& v : e01->nd(0)) CHECK(th.apply(e01->formal(v)).base == "u");
}

TEST_CASE("theta is a weak equivalence on interval and span pairs") {
  for (bool op : {true, false}) {
    auto c = interval_cat();
    RelativePair p = relative_pair(c, {"0", "1"});
    ApproxBundle b = build_approx(p, op, kCap);
    for (const auto& d : p.d->objects)
      for (const auto& cobj : c->objects) {
        ThetaReport r = verify_theta_we(b, d, cobj, kCap - 1);
        INFO(d, " ", cobj, " ", r.witness);
        CHECK(r.ok());
      }
  }
  auto c = span_cat();
  RelativePair p = relative_pair(c, {"a", "c"});
  ApproxBundle b = build_approx(p, /*op_variant=*/true, kCap);
  for (const auto& d : p.d->objects)
    for (const auto& cobj : c->objects) {
      ThetaReport r = verify_theta_we(b, d, cobj, kCap - 1);
      INFO(d, " ", cobj, " ", r.witness);
      CHECK(r.ok());
    }
}

TEST_CASE("lambda inverts on a relative span instance") {
  auto c = span_cat();
  RelativePair p = relative_pair(c, {"a", "c"});
  Diagram x;
  x.index = p.d;
  x.value = {{"a", delta(0, kCap)}, {"c", constant_sset({"p", "q"}, kCap)}};
  x.action = {{"id_a", identity_map(x.value.at("a"))},
              {"id_c", identity_map(x.value.at("c"))}};
  x.validate();
  LambdaIso L = lambda_iso(p, x, kCap); // composition checks run inside
  // at b both sides are empty; at c the tensor collapses to X(c)
  CHECK(L.bt.diagram.at("b")->top_dim() == -1);
  CHECK(iso_check(L.bt.diagram.at("c"), x.at("c")).has_value());
}

TEST_CASE("bar approximation over the terminal category is an isomorphism") {
  auto c = terminal_cat();
  Diagram x = point_diagram(c);
  BarApprox bar = bar_approx(x, relative_pair(c, {"*"}), true, kCap);
  CHECK(invert_map(bar.xi.at("*")).has_value());
}

TEST_CASE("bar approximation is an equivalence over the subcategory") {
  Diagram x = s0_span();
  RelativePair p = relative_pair(x.index, {"a", "c"});
  BarApprox bar = bar_approx(x, p, /*op_variant=*/true, kCap);
  for (const auto& d : p.d_objs) {
    CHECK(is_homology_equivalence(bar.xi.at(d), kCap - 1));
    CHECK(invert_map(bar.eps.eps.at(d)).has_value());
  }
  // D = C: equivalence everywhere
  RelativePair full = relative_pair(x.index, {"a", "b", "c"});
  BarApprox bar2 = bar_approx(x, full, /*op_variant=*/true, kCap);
  for (const auto& o : x.index->objects)
    CHECK(is_homology_equivalence(bar2.xi.at(o), kCap - 1));
}

TEST_CASE("homotopy colimit of the suspension span is a circle") {
  HocolimResult h = hocolim(s0_span(), kCap);
  CHECK(homology(*h.sset, 2) == groups({1, 1, 0}));
  h.to_colim.validate();
}

TEST_CASE("homotopy colimit of the constant point is contractible") {
  HocolimResult h = hocolim(point_diagram(span_cat()), kCap);
  CHECK(homology(*h.sset, 2) == groups({1, 0, 0}));
}

TEST_CASE("L-colimit matches the homotopy colimit homology") {
  LcolimResult l = lcolim(s0_span(), /*op_variant=*/true, kCap);
  CHECK(homology(*l.sset, 2) == groups({1, 1, 0}));
}

TEST_CASE("the comparison map is an isomorphism with commuting triangle") {
  for (const Diagram& x : {s0_span(), point_diagram(span_cat()),
                           point_diagram(terminal_cat())}) {
    Thm62Report r = thm62_compare(x, kCap);
    CHECK(r.backward.has_value());
    CHECK(r.triangle_ok);
  }
}

TEST_CASE("the plain-nerve variant agrees in homology") {
  NatVariantReport r = hocolim_nat_variant_compare(s0_span(), kCap, 2);
  CHECK(r.equal);
  NatVariantReport r2 =
      hocolim_nat_variant_compare(point_diagram(interval_cat()), kCap, 2);
  CHECK(r2.equal);
}
