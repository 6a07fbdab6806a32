#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lahyper/error.hpp"
#include "lahyper/laws.hpp"
#include "lahyper/search.hpp"
#include "test_support.hpp"

using namespace lahyper;
using lahyper::test::elem;
using lahyper::test::set;
using lahyper::test::table1;
using lahyper::test::table2;

namespace {
  std::vector<LawId> element_laws() {
    std::vector<LawId> out;
    for (auto id : all_laws()) {
      if (law_info(id).scope == LawScope::element) {
        out.push_back(id);
      }
    }
    return out;
  }

  // Recomputes a witness through the public core operations only.
  std::pair<ElemSet, ElemSet> recompute_left_invertive(HyperTable const& t,
                                                       Witness const&    w) {
    auto const a = w.elements[0];
    auto const b = w.elements[1];
    auto const c = w.elements[2];
    return {set_product(t, hyper(t, a, b), ElemSet::singleton(c)),
            set_product(t, hyper(t, c, b), ElemSet::singleton(a))};
  }
}  // namespace

TEST_CASE("Table 1 violates the left invertive law") {
  auto const& t = table1();
  auto const  r = check_law(t, LawId::left_invertive, {.count_violations = true,
                                                     .all_witnesses    = true});
  CHECK(r.verdict == Verdict::fails);
  CHECK_FALSE(r.holds());
  REQUIRE(r.first_witness);
  // Golden values from tests/oracles/golden_values.py.
  auto const& w = *r.first_witness;
  CHECK(w.elements == std::vector<std::size_t>{elem(t, 'b'), elem(t, 'd'), elem(t, 'd')});
  CHECK(w.lhs == set(t, "ab"));
  CHECK(w.rhs == set(t, "b"));
  CHECK(r.violation_count == 6);
  CHECK(r.instances_checked == 125);

  Witness const known{{elem(t, 'd'), elem(t, 'd'), elem(t, 'b')}, {}, set(t, "b"), set(t, "ab")};
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), known) != r.witnesses.end());
  for (auto const& each : r.witnesses) {
    auto const [lhs, rhs] = recompute_left_invertive(t, each);
    CHECK(lhs == each.lhs);
    CHECK(rhs == each.rhs);
    CHECK(lhs != rhs);
  }
}

TEST_CASE("Table 1 instance (a,b,d) satisfies the law") {
  auto const&         t     = table1();
  std::uint64_t const tuple[] = {elem(t, 'a'), elem(t, 'b'), elem(t, 'd')};
  auto const [lhs, rhs] = evaluate_instance(t, LawId::left_invertive, tuple);
  CHECK(lhs == set(t, "a"));
  CHECK(rhs == set(t, "a"));
}

TEST_CASE("Table 2 violates the left invertive law") {
  auto const& t = table2();
  auto const  r = check_law(t, LawId::left_invertive, {.count_violations = true,
                                                     .all_witnesses    = true});
  REQUIRE(r.first_witness);
  CHECK(r.first_witness->elements
        == std::vector<std::size_t>{elem(t, 'b'), elem(t, 'b'), elem(t, 'c')});
  CHECK(r.first_witness->lhs == set(t, "abc"));
  CHECK(r.first_witness->rhs == set(t, "abcd"));
  CHECK(r.violation_count == 12);
  Witness const known{{elem(t, 'c'), elem(t, 'd'), elem(t, 'b')}, {}, set(t, "abcd"), set(t, "abc")};
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), known) != r.witnesses.end());
}

TEST_CASE("violation count is only computed on request") {
  auto const r = check_law(table1(), LawId::left_invertive);
  CHECK_FALSE(r.violation_count);
  CHECK(r.witnesses.empty());
  CHECK(r.first_witness);
}

TEST_CASE("constant and total tables satisfy every law") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const constant = test::constant_table(n, ElemSet::singleton(0));
    auto const total    = test::total_table(n);
    for (auto id : element_laws()) {
      CHECK(check_law(constant, id).holds());
      CHECK(check_law(total, id).holds());
    }
  }
  auto const total = test::total_table(3);
  for (auto id : {LawId::set_left_invertive, LawId::set_medial}) {
    auto const r = check_set_law(total, id, Exhaustive{});
    CHECK(r.holds());
    CHECK(r.instances_checked == (id == LawId::set_medial ? 2401U : 343U));
  }
}

TEST_CASE("scope and guard errors") {
  CHECK_THROWS_AS(check_law(table1(), LawId::set_medial), DomainError);
  CHECK_THROWS_AS(check_set_law(table1(), LawId::medial, Exhaustive{}), DomainError);
  CHECK_THROWS_AS(check_set_law(table1(), LawId::set_medial, Exhaustive{}),
                  ExhaustiveTooLarge);
  CHECK_NOTHROW(check_set_law(table2(), LawId::set_medial, Exhaustive{}));
}

TEST_CASE("set-level laws on the published tables") {
  // Golden: brute force over all 15^4 (Table 2) and 31^4 (Table 1)
  // quadruples finds no SetMedial violation.
  CHECK(check_set_law(table2(), LawId::set_medial, Exhaustive{}).holds());
  auto const sampled =
      check_set_law(table1(), LawId::set_medial, Sampled{7, 20000});
  CHECK(sampled.verdict == Verdict::not_refuted);
  CHECK_FALSE(sampled.holds());
  CHECK_FALSE(sampled.exhaustive);
  // Table 2 is not left invertive and its set-level version fails too.
  auto const sli = check_set_law(table2(), LawId::set_left_invertive, Exhaustive{});
  CHECK(sli.verdict == Verdict::fails);
}

TEST_CASE("sampled checks are deterministic and find violations") {
  auto const& t  = table1();
  auto const  r1 = check_set_law(t, LawId::set_left_invertive, Sampled{42, 5000},
                                {.count_violations = true});
  auto const  r2 = check_set_law(t, LawId::set_left_invertive, Sampled{42, 5000},
                                {.count_violations = true});
  CHECK(r1.verdict == Verdict::fails);
  REQUIRE(r1.first_witness);
  CHECK(*r1.first_witness == *r2.first_witness);
  CHECK(r1.violation_count == r2.violation_count);
  std::vector<std::uint64_t> tuple;
  for (auto s : r1.first_witness->subsets) {
    tuple.push_back(s.bits());
  }
  auto const [lhs, rhs] = evaluate_instance(t, LawId::set_left_invertive, tuple);
  CHECK(lhs == r1.first_witness->lhs);
  CHECK(rhs == r1.first_witness->rhs);
  // Set witnesses recomputed with core products.
  auto const& s = r1.first_witness->subsets;
  CHECK(set_product(t, set_product(t, s[0], s[1]), s[2]) == lhs);
  CHECK(set_product(t, set_product(t, s[2], s[1]), s[0]) == rhs);
}

TEST_CASE("lifting: left invertive tables satisfy the set-level laws") {
  // Both set laws are invariant under relabeling, so order 3 visits one
  // table per isomorphism class.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t models = 0;
    auto const  mode   = n < 3 ? SearchMode::emit : SearchMode::emit_iso;
    enumerate_tables({.n = n, .laws = {LawId::left_invertive}, .mode = mode},
                     [&](HyperTable const& t) {
                       ++models;
                       CHECK(check_set_law(t, LawId::set_left_invertive, Exhaustive{}).holds());
                       CHECK(check_set_law(t, LawId::set_medial, Exhaustive{}).holds());
                       CHECK(check_law(t, LawId::medial).holds());
                     });
    CHECK(models > 0);
  }
}

TEST_CASE("relabeling equivariance") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    std::size_t const n = 1 + round % 4;
    auto const        t = test::random_table(n, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const image = relabel(t, perm);
    for (auto id : element_laws()) {
      CHECK(check_law(t, id).holds() == check_law(image, id).holds());
    }
  }
}

TEST_CASE("witness determinism across worker counts") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    auto const t = test::random_table(4, rng);
    for (auto id : element_laws()) {
      auto const one  = check_law(t, id, {.count_violations = true, .workers = 1});
      auto const many = check_law(t, id, {.count_violations = true, .workers = 8});
      CHECK(one.first_witness == many.first_witness);
      CHECK(one.violation_count == many.violation_count);
    }
    auto const one  = check_set_law(t, LawId::set_medial, Exhaustive{}, {.workers = 1});
    auto const many = check_set_law(t, LawId::set_medial, Exhaustive{}, {.workers = 6});
    CHECK(one.first_witness == many.first_witness);
  }
}

TEST_CASE("first witness is the lexicographic minimum") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    auto const t = test::random_table(3, rng);
    auto const r = check_law(t, LawId::left_invertive, {.all_witnesses = true});
    if (r.holds()) {
      CHECK(test::naive_left_invertive(t));
      continue;
    }
    CHECK_FALSE(test::naive_left_invertive(t));
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front() == *r.first_witness);
    CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end(),
                         [](auto const& x, auto const& y) { return x.elements < y.elements; }));
  }
}

TEST_CASE("law ids parse case-insensitively") {
  CHECK(parse_law_id("LeftInvertive") == LawId::left_invertive);
  CHECK(parse_law_id("setmedial") == LawId::set_medial);
  CHECK_FALSE(parse_law_id("Distributive"));
  CHECK(to_string(LawId::locally_associative) == "LocallyAssociative");
}
