#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "cathom/approx.hpp"
#include "cathom/corpus.hpp"
#include "cathom/io.hpp"

using namespace cathom;

TEST_CASE("category round trip") {
  for (const auto& name : corpus_category_names()) {
    CatPtr c = corpus_category(name);
    CatPtr back = category_from_json(category_to_json(*c));
    CHECK(*back == *c);
  }
}

TEST_CASE("simplicial set round trip") {
  std::vector<SSetPtr> shapes = {delta(2, 3), boundary_delta(2, 3),
                                 nerve(corpus_category("square"), 3).sset};
  for (const auto& k : shapes) {
    SSetPtr back = sset_from_json(sset_to_json(*k));
    CHECK(*back == *k);
  }
}

TEST_CASE("diagram round trip") {
  for (const auto& name : corpus_category_names()) {
    CatPtr c = corpus_category(name);
    for (const auto& [dname, x] : corpus_diagrams(c, 3)) {
      Diagram back = diagram_from_json(diagram_to_json(x), "");
      CHECK(*back.index == *x.index);
      for (const auto& [obj, k] : x.value) CHECK(*back.at(obj) == *k);
      for (const auto& [mid, f] : x.action)
        CHECK(back.act(mid).assignment == f.assignment);
    }
  }
}

TEST_CASE("diagram file with nested value paths") {
  const std::string dir = "io_test_tmp";
  write_json_file(dir + "/interval.cat.json",
                  category_to_json(*corpus_category("interval")));
  write_json_file(dir + "/pt.sset.json", sset_to_json(*delta(0, 2)));
  Json j;
  j["category"] = "interval.cat.json";
  j["values"] = {{"0", "pt.sset.json"}, {"1", "pt.sset.json"}};
  j["action"] = {{"u", {{"0", "0"}}}};
  write_json_file(dir + "/diag.json", j);
  Diagram x = load_diagram_file(dir + "/diag.json");
  CHECK(x.index->objects.size() == 2);
  CHECK(x.at("0")->nd_count(0) == 1);
  CHECK(x.act("u").assignment.at("0").base == "0");
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(category_from_json(Json::array()), Error);
  Json bad_cat = {{"objects", {"a"}},
                  {"morphisms", {{{"id", "f"}, {"src", "a"}, {"tgt", "z"}}}}};
  CHECK_THROWS_AS(category_from_json(bad_cat), Error);
  Json bad_sset = {{"dim_cap", 2}, {"nd", {{"1", {"e"}}}}, {"faces", Json::object()}};
  CHECK_THROWS_AS(sset_from_json(bad_sset), Error);
}

TEST_CASE("homology serialization") {
  Json j = homology_to_json(homology(*boundary_delta(2, 3), 2));
  CHECK(j.size() == 3);
  CHECK(j[0]["betti"] == 1);
  CHECK(j[1]["betti"] == 1);
  CHECK(j[2]["betti"] == 0);
  CHECK(j[1]["torsion"].empty());
}

TEST_CASE("serialization is deterministic") {
  Diagram x = corpus_diagrams(corpus_category("span"), 3).back().second;
  CHECK(diagram_to_json(x).dump(2) == diagram_to_json(x).dump(2));
  HocolimResult h1 = hocolim(x, 3);
  HocolimResult h2 = hocolim(x, 3);
  CHECK(sset_to_json(*h1.sset).dump(2) == sset_to_json(*h2.sset).dump(2));
}
