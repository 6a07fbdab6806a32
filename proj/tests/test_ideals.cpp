#include <doctest.h>

#include <random>

#include "lahyper/error.hpp"
#include "lahyper/ideals.hpp"
#include "lahyper/search.hpp"
#include "test_support.hpp"

using namespace lahyper;
using lahyper::test::elem;
using lahyper::test::set;
using lahyper::test::table1;
using lahyper::test::table2;

TEST_CASE("one-sided hyperideals on Table 1") {
  auto const& t = table1();
  CHECK(is_hyperideal(t, set(t, "a"), IdealSide::left).holds());
  CHECK(is_hyperideal(t, set(t, "a"), IdealSide::right).holds());
  CHECK(is_hyperideal(t, set(t, "a"), IdealSide::two_sided).holds());
  for (auto side : {IdealSide::left, IdealSide::right, IdealSide::two_sided}) {
    CHECK(is_hyperideal(t, t.carrier(), side).holds());
    CHECK(is_hyperideal(table2(), table2().carrier(), side).holds());
  }

  auto const left = is_hyperideal(t, set(t, "b"), IdealSide::left);
  CHECK_FALSE(left.holds());
  REQUIRE(left.escape);
  CHECK(left.escape->left_operand == elem(t, 'a'));
  CHECK(left.escape->right_operand == elem(t, 'b'));
  CHECK(left.escape->escaping == set(t, "a"));

  // Columns a and e and rows a and e of Table 1 stay inside {a,e}.
  CHECK(is_hyperideal(t, set(t, "ae"), IdealSide::two_sided).holds());
  auto const right = is_hyperideal(t, set(t, "ad"), IdealSide::right);
  REQUIRE(right.escape);
  CHECK(right.escape->side == IdealSide::right);
  CHECK(right.escape->left_operand == elem(t, 'd'));
  CHECK(right.escape->right_operand == elem(t, 'b'));

  CHECK_THROWS_AS(is_hyperideal(t, ElemSet(), IdealSide::left), EmptyOperand);
}

TEST_CASE("(m,n) checks: examples") {
  auto const& t1 = table1();
  auto const  v  = is_mn_hyperideal(t1, set(t1, "a"), 1, 1);
  CHECK(v.holds_under_convention);
  CHECK_FALSE(v.bracketing_dependent);
  CHECK(v.outcomes.size() == 2);

  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      if (m + n == 0) {
        continue;
      }
      auto const all = is_mn_hyperideal(t1, t1.carrier(), m, n);
      CHECK(all.holds());
      CHECK_FALSE(all.bracketing_dependent);
    }
  }

  // Golden: every one of the 5 bracketings of [A, A, H, A] gives {a,b,c,d}.
  auto const& t2 = table2();
  auto const  w  = is_mn_hyperideal(t2, set(t2, "abc"), 2, 1);
  CHECK_FALSE(w.holds_under_convention);
  CHECK_FALSE(w.bracketing_dependent);
  CHECK_FALSE(w.failing_bracketing);
  REQUIRE(w.outcomes.size() == 5);
  for (auto const& [tree, value] : w.outcomes) {
    CHECK(value == set(t2, "abcd"));
  }
}

TEST_CASE("(m,n) check that depends on the bracketing") {
  auto const t = HyperTable::with_default_names(
      2, {ElemSet(1), ElemSet(1), ElemSet(2), ElemSet(1)});
  auto const v = is_mn_hyperideal(t, ElemSet(2), 1, 1);
  CHECK(v.bracketing_dependent);
  CHECK_FALSE(v.holds_under_convention);
  CHECK_FALSE(v.holds());
  REQUIRE(v.failing_bracketing);
  CHECK(v.failing_bracketing->first.to_string() == "(01)2");
  CHECK(v.failing_bracketing->second == ElemSet(1));
  CHECK(v.outcomes[0].second == ElemSet(2));
}

TEST_CASE("(m,n) guards") {
  auto const& t = table1();
  CHECK_THROWS_AS(is_mn_hyperideal(t, set(t, "a"), 0, 0), DomainError);
  CHECK_THROWS_AS(is_mn_hyperideal(t, set(t, "a"), 5, 4), LimitError);
  CHECK_NOTHROW(is_mn_hyperideal(t, set(t, "a"), 4, 4));
  CHECK_THROWS_AS(is_mn_hyperideal(t, ElemSet(), 1, 1), EmptyOperand);
}

namespace {
  void check_one_sided_agreement(HyperTable const& t) {
    for (std::uint64_t a = 1; a <= t.carrier().bits(); ++a) {
      ElemSet const s(a);
      CHECK(is_mn_hyperideal(t, s, 1, 0).holds_under_convention
            == is_hyperideal(t, s, IdealSide::right).holds());
      CHECK(is_mn_hyperideal(t, s, 0, 1).holds_under_convention
            == is_hyperideal(t, s, IdealSide::left).holds());
    }
  }
}  // namespace

TEST_CASE("(1,0) and (0,1) coincide with right and left hyperideals") {
  for (std::size_t n = 1; n <= 2; ++n) {
    test::for_each_table(n, check_one_sided_agreement);
  }
  std::mt19937_64 rng(3);
  for (int round = 0; round < 20000; ++round) {
    check_one_sided_agreement(test::random_table(3, rng));
  }
}

TEST_CASE("associative tables never depend on the bracketing") {
  for (std::size_t n = 1; n <= 3; ++n) {
    enumerate_tables({.n = n, .laws = {LawId::associative}, .mode = SearchMode::emit},
                     [](HyperTable const& t) {
                       for (std::uint64_t a = 1; a <= t.carrier().bits(); ++a) {
                         for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}}) {
                           CHECK_FALSE(is_mn_hyperideal(t, ElemSet(a), m, k)
                                           .bracketing_dependent);
                         }
                       }
                     });
  }
}
