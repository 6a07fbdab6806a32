#include <doctest.h>

#include "lahyper/report.hpp"
#include "test_support.hpp"

using namespace lahyper;
using lahyper::test::elem;
using lahyper::test::set;
using lahyper::test::table1;
using lahyper::test::table2;

TEST_CASE("law statements") {
  CHECK(law_statement(LawId::left_invertive) == "(x∘y)*{z} = (z∘y)*{x}");
  CHECK(law_statement(LawId::medial) == "(x∘y)*(z∘w) = (x∘z)*(y∘w)");
  CHECK(law_statement(LawId::locally_associative) == "(x∘x)*{x} = {x}*(x∘x)");
  CHECK(law_statement(LawId::commutative) == "x∘y = y∘x");
  CHECK(law_statement(LawId::set_medial) == "(A*B)*(C*D) = (A*C)*(B*D)");
}

TEST_CASE("witness chains in the published style") {
  auto const& t = table1();
  Witness const w{{elem(t, 'd'), elem(t, 'd'), elem(t, 'b')}, {}, set(t, "b"), set(t, "ab")};
  auto const lines = witness_chain(t, LawId::left_invertive, w);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "(d∘d)*{b} = {d}*{b} = d∘b = {b}");
  CHECK(lines[1] == "(b∘d)*{d} = {a,c}*{d} = (a∘d) ∪ (c∘d) = {a} ∪ {a,b} = {a,b}");
  CHECK(lines[2] == "(d∘d)*{b} ≠ (b∘d)*{d}");

  auto const& t2 = table2();
  Witness const w2{{elem(t2, 'c'), elem(t2, 'd'), elem(t2, 'b')}, {}, set(t2, "abcd"), set(t2, "abc")};
  auto const l2 = witness_chain(t2, LawId::left_invertive, w2);
  CHECK(l2[0] == "(c∘d)*{b} = {a,b,c}*{b} = (a∘b) ∪ (b∘b) ∪ (c∘b) = {a} ∪ {a,b,c,d} ∪ {a,b,c} = {a,b,c,d}");
  CHECK(l2[1] == "(b∘d)*{c} = {a,b,c}*{c} = (a∘c) ∪ (b∘c) ∪ (c∘c) = {a} ∪ {a,b,c} ∪ {a,b,c} = {a,b,c}");
}

TEST_CASE("chains for nested and set-scope laws") {
  auto const& t = table1();
  auto const  r = check_law(t, LawId::medial);
  if (r.first_witness) {
    auto const lines = witness_chain(t, LawId::medial, *r.first_witness);
    CHECK(lines[0].ends_with(" = " + format_set(t, r.first_witness->lhs)));
    CHECK(lines[1].ends_with(" = " + format_set(t, r.first_witness->rhs)));
  }
  Witness const s{{}, {set(t, "b"), set(t, "d"), set(t, "d")}, ElemSet(), ElemSet()};
  auto const lines = witness_chain(t, LawId::set_left_invertive, s);
  CHECK(lines[0] == "({b}*{d})*{d} = {a,c}*{d} = (a∘d) ∪ (c∘d) = {a} ∪ {a,b} = {a,b}");
  CHECK(lines[2] == "({b}*{d})*{d} ≠ ({d}*{d})*{b}");
}

TEST_CASE("text law reports") {
  auto const& t    = table1();
  auto const  fail = emit_report(t, check_law(t, LawId::left_invertive, {.count_violations = true}),
                                ReportFormat::text);
  CHECK(fail.find("law fails at (x, y, z) = (b, d, d)") != std::string::npos);
  CHECK(fail.find("≠") != std::string::npos);
  CHECK(fail.find("{a,b}") != std::string::npos);
  CHECK(fail.find("violations: 6 of 125 instances") != std::string::npos);

  auto const ok = emit_report(test::total_table(3), check_law(test::total_table(3), LawId::left_invertive),
                              ReportFormat::text);
  CHECK(ok.find("law holds (3×3×3 instances checked)") != std::string::npos);
  auto const one = emit_report(t, check_law(t, LawId::locally_associative), ReportFormat::text);
  CHECK(one.find("law holds (5 instances checked)") != std::string::npos);
}

TEST_CASE("json reports") {
  auto const& t      = table1();
  auto const  family = power_family(t, set(t, "b"), 3);
  auto const  j      = to_json(t, family);
  CHECK(j["kind"] == "power_family");
  CHECK(j["exponent"] == 3);
  CHECK(j["catalan"] == 2);
  CHECK(j["well_defined"] == true);
  CHECK(j["distinct_values"] == nlohmann::ordered_json::parse(R"([["a","e"]])"));
  CHECK(j["outcomes"][0]["tree"] == "0(12)");

  auto const report = check_law(t, LawId::left_invertive, {.count_violations = true});
  auto const text   = emit_report(t, report, ReportFormat::json);
  CHECK(text == emit_report(t, check_law(t, LawId::left_invertive, {.count_violations = true}),
                            ReportFormat::json));
  auto const parsed = nlohmann::json::parse(text);
  CHECK(parsed["verdict"] == "fails");
  CHECK(parsed["holds"] == false);
  CHECK(parsed["first_witness"]["tuple"] == nlohmann::json::parse(R"(["b","d","d"])"));
  CHECK(parsed["violation_count"] == 6);

  auto const ideal = to_json(t, is_mn_hyperideal(t, set(t, "a"), 1, 1));
  CHECK(ideal["ideal_kind"] == "(m,n)");
  CHECK(ideal["bracketings"].size() == 2);
  CHECK(ideal["failing_bracketing"].is_null());

  auto const summary = to_json(EnumerationSummary{2, {LawId::left_invertive}, false, 21});
  CHECK(summary["count"] == 21);
  CHECK(summary["laws"][0] == "LeftInvertive");
}

TEST_CASE("text ideal and power reports") {
  auto const& t     = table1();
  auto const  ideal = emit_report(t, is_hyperideal(t, set(t, "b"), IdealSide::left), ReportFormat::text);
  CHECK(ideal == "{b} is not a left hyperideal: a∘b = {a} leaves {b} by {a}\n");
  auto const power = emit_report(t, power_family(t, set(t, "b"), 3), ReportFormat::text);
  CHECK(power.find("({b}*{b})*{b} = {a,e}") != std::string::npos);
  CHECK(power.find("well-defined: yes") != std::string::npos);
  auto const mn = emit_report(t, is_mn_hyperideal(t, set(t, "a"), 1, 1), ReportFormat::text);
  CHECK(mn.find("A*(H*A) = {a} ⊆ A") != std::string::npos);
}
