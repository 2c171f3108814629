#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkoszul/report.hpp"
#include "gkoszul/ring.hpp"

using namespace gkoszul;

namespace {

Algebra two_cubes() {
  return build_algebra(make_presentation(101, {"x", "y"}, {"x^3", "y^3"}));
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check report renders the envelope with sorted keys") {
  Algebra a = two_cubes();
  ReportConfig cfg;
  CheckResults r;
  r.judged.push_back({"K2", {Verdict::True, 6, false, ""}});
  r.judged.push_back({"thom", {Verdict::False, 0, true, "witness text"}});
  r.judged.push_back({"G", {Verdict::Unknown, 6, false, ""}});
  r.numbers.push_back({"v", 3});
  r.flags.push_back({"compressed", true});
  r.tables.push_back({"hilbert", {1, 2, 3, 2, 1}});

  std::string doc = render_check_json(a, cfg, r);
  CHECK(contains(doc, "\"schema\": 1"));
  CHECK(contains(doc, "\"config\""));
  CHECK(contains(doc, "\"instance\""));
  CHECK(contains(doc, "\"results\""));
  CHECK(contains(doc, "\"witnesses\""));
  // three-valued verdicts: booleans when decided, a string otherwise
  CHECK(contains(doc, "\"verdict\": true"));
  CHECK(contains(doc, "\"verdict\": false"));
  CHECK(contains(doc, "\"verdict\": \"unknown\""));
  CHECK(contains(doc, "\"witness\": \"witness text\""));
  CHECK(contains(doc, "\"v\": 3"));
  CHECK(contains(doc, "\"compressed\": true"));
  CHECK(contains(doc, "\"depth\": 6"));
  CHECK(contains(doc, "\"field\": 101"));
  CHECK(contains(doc, "\"seed\": 0"));
  CHECK(contains(doc, "\"embdim\": 2"));
  CHECK(contains(doc, "\"socle_degree\": 4"));
  // the envelope is ordered: config before instance before results
  CHECK(doc.find("\"config\"") < doc.find("\"instance\""));
  CHECK(doc.find("\"instance\"") < doc.find("\"results\""));
  CHECK(doc.find("\"results\"") < doc.find("\"schema\""));
  CHECK(doc.back() == '\n');

  // byte-identical across repeated rendering
  CHECK(doc == render_check_json(a, cfg, r));

  std::string txt = render_check_text(a, cfg, r);
  CHECK(contains(txt, "K2: true"));
  CHECK(contains(txt, "thom: false"));
  CHECK(contains(txt, "G: unknown"));
  CHECK(contains(txt, "hilbert: 1, 2, 3, 2, 1"));
  CHECK(contains(txt, "embdim 2"));
  CHECK(txt == render_check_text(a, cfg, r));
}

TEST_CASE("audit report rendering carries witnesses") {
  Algebra a = two_cubes();
  ReportConfig cfg;
  AuditReport rep;
  rep.which = "k2";
  rep.pass = false;
  rep.checks.push_back({"(1) small rho_t", Verdict::False, true, "i=2"});
  rep.checks.push_back({"(5) Tor(nu_t) = 0", Verdict::True, false, ""});

  std::string doc = render_audit_json(a, cfg, rep);
  CHECK(contains(doc, "\"which\": \"k2\""));
  CHECK(contains(doc, "\"pass\": false"));
  CHECK(contains(doc, "\"name\": \"(1) small rho_t\""));
  CHECK(contains(doc, "\"check\": \"(1) small rho_t\""));
  CHECK(contains(doc, "\"value\": \"i=2\""));
  CHECK(doc == render_audit_json(a, cfg, rep));

  std::string txt = render_audit_text(a, cfg, rep);
  CHECK(contains(txt, "audit k2: FAIL"));
  CHECK(contains(txt, "(1) small rho_t: false  (decisive, i=2)"));
  CHECK(contains(txt, "(5) Tor(nu_t) = 0: true  (within depth)"));
}

TEST_CASE("harness report rendering") {
  ReportConfig cfg;
  cfg.seed = 5;
  HarnessReport rep;
  rep.q = Question::Q2;
  rep.depth = 6;
  rep.pass = false;
  rep.items.push_back({"one", false, "t = 2", {}, false});
  rep.items.push_back({"two", true, "", {4, 5}, true});
  rep.candidates.push_back("two");

  std::string doc = render_harness_json(cfg, rep);
  CHECK(contains(doc, "\"question\": \"q2\""));
  CHECK(contains(doc, "\"kind\": \"family\""));
  CHECK(contains(doc, "\"base_seed\": 5"));
  CHECK(contains(doc, "\"gate_reason\": \"t = 2\""));
  CHECK(contains(doc, "\"failed_j\""));
  CHECK(doc == render_harness_json(cfg, rep));

  std::string txt = render_harness_text(cfg, rep);
  CHECK(contains(txt, "audit q2: CANDIDATES FOUND"));
  CHECK(contains(txt, "one: excluded (t = 2)"));
  CHECK(contains(txt, "two: CANDIDATE at j = 4 5"));
}

TEST_CASE("table rendering for resolutions and series") {
  Algebra a = two_cubes();
  ReportConfig cfg;
  std::string doc = render_table_json(a, cfg, "betti", "m^2", {3, 6, 9});
  CHECK(contains(doc, "\"module\": \"m^2\""));
  CHECK(contains(doc, "\"betti\""));
  CHECK(doc == render_table_json(a, cfg, "betti", "m^2", {3, 6, 9}));

  std::string txt = render_table_text(a, cfg, "series", "k", {1, 2, 3});
  CHECK(contains(txt, "series of k to depth 6: 1, 2, 3"));
}
