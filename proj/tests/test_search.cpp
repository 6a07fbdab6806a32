#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lahyper/error.hpp"
#include "lahyper/laws.hpp"
#include "lahyper/search.hpp"
#include "test_support.hpp"

using namespace lahyper;
using lahyper::test::table1;
using lahyper::test::table2;

namespace {
  std::vector<HyperTable> collect(SearchSpec spec) {
    std::vector<HyperTable> out;
    auto const count = enumerate_tables(spec, [&](HyperTable const& t) { out.push_back(t); });
    CHECK(count == out.size());
    return out;
  }

  std::vector<std::uint8_t> encoding(HyperTable const& t) {
    std::vector<std::uint8_t> out;
    for (auto e : t.entries()) {
      out.push_back(static_cast<std::uint8_t>(e.bits()));
    }
    return out;
  }
}  // namespace

TEST_CASE("small counts") {
  CHECK(enumerate_tables({.n = 1, .laws = {LawId::left_invertive}}) == 1);
  CHECK(enumerate_tables({.n = 2}) == 81);
  CHECK(enumerate_tables({.n = 3, .laws = {}, .workers = 4}) == 40353607);
}

TEST_CASE("order-2 left invertive count matches the brute-force oracle") {
  // Golden: 21 of the 81 order-2 tables are left invertive
  // (tests/oracles/golden_values.py).
  std::vector<HyperTable> naive;
  test::for_each_table(2, [&](HyperTable const& t) {
    if (test::naive_left_invertive(t)) {
      naive.push_back(t);
    }
  });
  CHECK(naive.size() == 21);
  auto const pruned = collect({.n = 2, .laws = {LawId::left_invertive}, .mode = SearchMode::emit});
  CHECK(pruned == naive);
}

TEST_CASE("pruned and unpruned scans agree for every single law") {
  for (auto id : all_laws()) {
    if (law_info(id).scope != LawScope::element) {
      continue;
    }
    for (std::size_t n = 1; n <= 2; ++n) {
      auto const pruned = collect({.n = n, .laws = {id}, .mode = SearchMode::emit});
      auto const full =
          collect({.n = n, .laws = {id}, .mode = SearchMode::emit, .prune = false});
      CHECK(pruned == full);
    }
  }
  auto const pruned3 = enumerate_tables({.n = 3, .laws = {LawId::left_invertive}, .workers = 0});
  std::uint64_t naive3 = 0;
  test::for_each_table(3, [&](HyperTable const& t) {
    naive3 += test::naive_left_invertive(t) ? 1 : 0;
  });
  CHECK(pruned3 == naive3);
}

TEST_CASE("emission is lexicographic and sound") {
  auto const models = collect({.n = 3,
                               .laws = {LawId::left_invertive, LawId::commutative},
                               .mode = SearchMode::emit});
  REQUIRE_FALSE(models.empty());
  for (std::size_t i = 0; i < models.size(); ++i) {
    CHECK(test::naive_left_invertive(models[i]));
    CHECK(check_law(models[i], LawId::commutative).holds());
    if (i > 0) {
      CHECK(encoding(models[i - 1]) < encoding(models[i]));
    }
  }
}

TEST_CASE("the published tables are not left invertive") {
  CHECK_FALSE(test::naive_left_invertive(table1()));
  CHECK_FALSE(test::naive_left_invertive(table2()));
  CHECK_FALSE(check_law(table2(), LawId::left_invertive).holds());
}

TEST_CASE("worker count does not change results") {
  for (auto mode : {SearchMode::emit, SearchMode::emit_iso}) {
    auto const one  = collect({.n = 3, .laws = {LawId::left_invertive}, .mode = mode, .workers = 1});
    auto const many = collect({.n = 3, .laws = {LawId::left_invertive}, .mode = mode, .workers = 5});
    CHECK(one == many);
  }
  CHECK(enumerate_tables({.n = 3, .laws = {LawId::associative}, .mode = SearchMode::count_iso, .workers = 1})
        == enumerate_tables({.n = 3, .laws = {LawId::associative}, .mode = SearchMode::count_iso, .workers = 7}));
}

TEST_CASE("isomorphism classes") {
  // Burnside over the two relabelings of {a,b}: (81 + 9) / 2.
  CHECK(enumerate_tables({.n = 2, .mode = SearchMode::count_iso}) == 45);

  // Group the left invertive order-2 models with are_isomorphic alone.
  auto const models = collect({.n = 2, .laws = {LawId::left_invertive}, .mode = SearchMode::emit});
  std::vector<HyperTable> reps;
  for (auto const& t : models) {
    bool const known = std::any_of(reps.begin(), reps.end(), [&](auto const& r) {
      return are_isomorphic(r, t).has_value();
    });
    if (!known) {
      reps.push_back(t);
    }
  }
  auto const iso = collect({.n = 2, .laws = {LawId::left_invertive}, .mode = SearchMode::emit_iso});
  CHECK(iso.size() == reps.size());
  for (auto const& t : iso) {
    auto const key = canonical_form(t);
    CHECK(std::vector<std::uint8_t>(key.bytes().begin(), key.bytes().end()) == encoding(t));
  }
}

TEST_CASE("canonical form examples") {
  auto const single = HyperTable::with_default_names(1, {ElemSet(1)});
  auto const key    = canonical_form(single);
  CHECK(key.order() == 1);
  CHECK(std::vector<std::uint8_t>(key.bytes().begin(), key.bytes().end())
        == std::vector<std::uint8_t>{1});

  auto const&              t1   = table1();
  std::vector<std::size_t> swap = {0, 2, 1, 3, 4};
  CHECK(canonical_form(t1) == canonical_form(relabel(t1, swap)));

  auto const x = HyperTable::with_default_names(2, {ElemSet(1), ElemSet(1), ElemSet(1), ElemSet(3)});
  auto const y = HyperTable::with_default_names(2, {ElemSet(1), ElemSet(3), ElemSet(3), ElemSet(3)});
  CHECK(canonical_form(x) != canonical_form(y));

  CHECK_THROWS_AS(canonical_form(test::total_table(7)), LimitError);
}

TEST_CASE("are_isomorphic witnesses") {
  auto const& t1 = table1();
  auto const  id = are_isomorphic(t1, t1);
  REQUIRE(id);
  CHECK(*id == std::vector<std::size_t>{0, 1, 2, 3, 4});

  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    std::size_t const n = 1 + round % 5;
    auto const        t = test::random_table(n, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const image = relabel(t, perm);
    auto const phi   = are_isomorphic(t, image);
    REQUIRE(phi);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        ElemSet mapped;
        for (auto x : t(a, b)) {
          mapped |= ElemSet::singleton((*phi)[x]);
        }
        CHECK(mapped == image((*phi)[a], (*phi)[b]));
      }
    }
  }
  CHECK_THROWS_AS(are_isomorphic(table1(), table2()), DomainError);
}

TEST_CASE("isomorphism agrees with canonical keys") {
  std::mt19937_64 rng(31);
  // Small entry alphabet so that random pairs are sometimes isomorphic.
  auto sparse_table = [&](std::size_t n) {
    std::uniform_int_distribution<int> pick(0, 1);
    std::vector<ElemSet> entries(n * n);
    for (auto& e : entries) {
      e = pick(rng) != 0 ? ElemSet::full(n) : ElemSet::singleton(0);
    }
    return HyperTable::with_default_names(n, entries);
  };
  int positives = 0;
  for (int round = 0; round < 3000; ++round) {
    std::size_t const n  = 1 + round % 3;
    auto const        t1 = sparse_table(n);
    auto const        t2 = sparse_table(n);
    bool const        iso = are_isomorphic(t1, t2).has_value();
    positives += iso ? 1 : 0;
    CHECK(iso == (canonical_form(t1) == canonical_form(t2)));
  }
  CHECK(positives > 0);
  for (int round = 0; round < 300; ++round) {
    std::size_t const n  = 1 + round % 4;
    auto const        t1 = test::random_table(n, rng);
    auto const        t2 = test::random_table(n, rng);
    CHECK(are_isomorphic(t1, t2).has_value() == (canonical_form(t1) == canonical_form(t2)));
  }
}

TEST_CASE("relabel rejects non-permutations") {
  auto const t = test::total_table(3);
  std::vector<std::size_t> bad = {0, 0, 1};
  CHECK_THROWS_AS(relabel(t, bad), DomainError);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_tables({.n = 0}), LimitError);
  CHECK_THROWS_AS(enumerate_tables({.n = 5}), LimitError);
  CHECK_THROWS_AS(enumerate_tables({.n = 2, .laws = {LawId::set_medial}}), DomainError);
}
