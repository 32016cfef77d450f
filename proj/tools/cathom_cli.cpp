#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "cathom/approx.hpp"
#include "cathom/io.hpp"
#include "cathom/suites.hpp"

using namespace cathom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "CapExceeded" || k == "SearchBudgetExceeded" || k == "TruncationRequired")
    return kExitBudget;
  return kExitInputError;
}

std::string out_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

/// Common dimension cap of all values; they must agree.
int diagram_cap(const Diagram& x) {
  int cap = -1;
  for (const auto& [obj, k] : x.value) {
    if (cap < 0) cap = k->dim_cap();
    if (k->dim_cap() != cap)
      fail("CapExceeded", "diagram values carry different dimension caps");
  }
  if (cap < 0) fail("ParseError", "diagram has no values");
  return cap;
}

int cmd_validate(const std::vector<std::string>& files) {
  // Unparseable input exits 2 (via the caller); a file that parses but breaks
  // an invariant (composition, simplicial identities, naturality) exits 1.
  for (const auto& f : files) {
    Json j = load_json_file(f);
    try {
      if (j.contains("category")) {
        load_diagram_file(f);
        std::cout << f << ": valid diagram\n";
      } else if (j.contains("dim_cap")) {
        sset_from_json(j);
        std::cout << f << ": valid simplicial set\n";
      } else if (j.contains("objects")) {
        category_from_json(j);
        std::cout << f << ": valid category\n";
      } else {
        fail("ParseError", f + ": not a category, simplicial set, or diagram file");
      }
    } catch (const Error& e) {
      if (e.kind() == "ParseError") throw;
      std::cout << f << ": INVALID (" << e.what() << ")\n";
      return kExitCheckFailure;
    }
  }
  return kExitOk;
}

int cmd_hocolim(const std::string& file, bool with_lcolim, bool with_thm62,
                int cap_opt, const std::string& out) {
  Diagram x = load_diagram_file(file);
  int cap = diagram_cap(x);
  if (cap_opt >= 0 && cap_opt != cap)
    fail("CapExceeded", "requested cap " + std::to_string(cap_opt) +
                            " differs from the values' cap " + std::to_string(cap));
  HocolimResult h = hocolim(x, cap);
  write_json_file(out_path(out, "hocolim.sset.json"), sset_to_json(*h.sset));
  write_json_file(out_path(out, "hocolim.homology.json"),
                  homology_to_json(homology(*h.sset, cap - 1)));
  std::cout << "hocolim: " << h.sset->nd_count(0) << " vertices, top dimension "
            << h.sset->top_dim() << "\n";
  if (with_lcolim || with_thm62) {
    LcolimResult l = lcolim(x, /*op_variant=*/true, cap);
    write_json_file(out_path(out, "lcolim.sset.json"), sset_to_json(*l.sset));
    write_json_file(out_path(out, "lcolim.homology.json"),
                    homology_to_json(homology(*l.sset, cap - 1)));
    std::cout << "lcolim: " << l.sset->nd_count(0) << " vertices, top dimension "
              << l.sset->top_dim() << "\n";
    if (with_thm62) {
      Thm62Report t = thm62_compare(x, cap);
      Json r;
      r["isomorphism"] = t.backward.has_value();
      r["triangle_commutes"] = t.triangle_ok;
      if (t.backward) {
        r["forward"] = sset_map_to_json(t.forward);
        r["backward"] = sset_map_to_json(*t.backward);
      }
      write_json_file(out_path(out, "thm62.report.json"), r);
      std::cout << "comparison: " << (t.ok() ? "isomorphism, triangle commutes" : "FAILED")
                << "\n";
      if (!t.ok()) return kExitCheckFailure;
    }
  }
  return kExitOk;
}

int cmd_approx(const std::string& file, const std::vector<std::string>& subcat,
               bool nat, int cap_opt, const std::string& out) {
  Diagram x = load_diagram_file(file);
  int cap = diagram_cap(x);
  if (cap_opt >= 0 && cap_opt != cap)
    fail("CapExceeded", "requested cap " + std::to_string(cap_opt) +
                            " differs from the values' cap " + std::to_string(cap));
  std::set<std::string> d_objs(subcat.begin(), subcat.end());
  if (d_objs.empty())
    d_objs.insert(x.index->objects.begin(), x.index->objects.end());
  RelativePair p = relative_pair(x.index, d_objs);
  BarApprox bar = bar_approx(x, p, /*op_variant=*/!nat, cap);
  write_json_file(out_path(out, "qbar.diagram.json"),
                  diagram_to_json(bar.qbar.diagram));
  write_json_file(out_path(out, "xi.map.json"), diagram_map_to_json(bar.xi));
  Json report = Json::array();
  bool all = true;
  for (const auto& d : p.d->objects) {
    bool equiv = is_homology_equivalence(bar.xi.at(d), cap - 1);
    bool eps_iso = invert_map(bar.eps.eps.at(d)).has_value();
    all = all && equiv && eps_iso;
    report.push_back({{"object", d},
                      {"homology_equivalence", equiv},
                      {"counit_isomorphism", eps_iso}});
    std::cout << "xi at " << d << ": "
              << (equiv ? "homology equivalence" : "NOT an equivalence")
              << ", counit " << (eps_iso ? "iso" : "NOT iso") << "\n";
  }
  write_json_file(out_path(out, "approx.report.json"), report);
  return all ? kExitOk : kExitCheckFailure;
}

int cmd_verify(const std::string& suite, int cap, long budget,
               const std::string& out) {
  SuiteReport r = run_suite(suite, cap, budget);
  Json j;
  j["suite"] = r.suite;
  Json checks = Json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"id", c.id}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = checks;
  j["all_pass"] = r.all_pass();
  write_json_file(out_path(out, "verify." + suite + ".json"), j);
  int passed = 0;
  for (const Check& c : r.checks) {
    if (c.pass) {
      ++passed;
    } else {
      std::cout << "FAIL " << c.id << ": " << c.witness << "\n";
    }
  }
  std::cout << suite << ": " << passed << "/" << r.checks.size()
            << " checks passed\n";
  return r.all_pass() ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categories, simplicial sets, and homotopy colimits"};
  app.require_subcommand(1);
  std::string out = ".";
  app.add_option("--out", out, "output directory for result files");

  auto* validate = app.add_subcommand("validate", "check input files");
  std::vector<std::string> files;
  validate->add_option("files", files, "category / simplicial set / diagram files")
      ->required();

  auto* hoco = app.add_subcommand("hocolim", "homotopy colimit of a diagram");
  std::string hoco_file;
  bool with_lcolim = false, with_thm62 = false;
  int hoco_cap = -1;
  hoco->add_option("--diagram", hoco_file, "diagram file")->required();
  hoco->add_flag("--lcolim", with_lcolim, "also compute the bar L-colimit");
  hoco->add_flag("--thm62", with_thm62, "also verify the comparison isomorphism");
  hoco->add_option("--cap", hoco_cap, "dimension cap (must match the values)");

  auto* approx = app.add_subcommand("approx", "bar cofibrant approximation");
  std::string approx_file, subcat_csv;
  bool nat = false;
  int approx_cap = -1;
  approx->add_option("--diagram", approx_file, "diagram file")->required();
  approx->add_option("--subcat", subcat_csv,
                     "comma-separated objects of the full subcategory");
  approx->add_flag("--nat", nat, "use the plain-nerve variant");
  approx->add_option("--cap", approx_cap, "dimension cap (must match the values)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_cap = 4;
  long budget = 2000000;
  verify->add_option("suite", suite, "one of: skeleton theta lambda adjunction thm62 nat-variant all")
      ->required();
  verify->add_option("--cap", verify_cap, "dimension cap for suite constructions");
  verify->add_option("--budget", budget, "search budget for enumerations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(files);
    if (*hoco) return cmd_hocolim(hoco_file, with_lcolim, with_thm62, hoco_cap, out);
    if (*approx) {
      std::vector<std::string> objs;
      std::stringstream ss(subcat_csv);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) objs.push_back(tok);
      return cmd_approx(approx_file, objs, nat, approx_cap, out);
    }
    if (*verify) return cmd_verify(suite, verify_cap, budget, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
