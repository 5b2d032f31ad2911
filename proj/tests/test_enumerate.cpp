#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <set>

#include "poma/congruence.hpp"
#include "poma/errors.hpp"
#include "poma/io.hpp"
#include "support.hpp"

using namespace poma;
using testing::C;

namespace {

std::set<std::vector<std::uint32_t>> codes(const std::vector<FiniteAlgebra>& v) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& a : v) out.insert(naive_canonical_code(a));
  return out;
}

std::vector<std::size_t> size_histogram(const std::vector<FiniteAlgebra>& v, std::size_t max) {
  std::vector<std::size_t> h(max, 0);
  for (const auto& a : v) ++h[a.size() - 1];
  return h;
}

}  // namespace

TEST_CASE("posets and distributive lattices") {
  const std::vector<std::size_t> posets = {1, 2, 5, 16, 63};
  for (std::size_t k = 1; k <= 5; ++k) CHECK(enum_posets(k).size() == posets[k - 1]);
  // Known counts of distributive lattices by size.
  const auto bdl = enum_bdl(7);
  CHECK(size_histogram(bdl, 7) == std::vector<std::size_t>{1, 1, 1, 2, 3, 5, 8});
  CHECK(codes(enum_bdl(6)) == codes(naive_bdl(6)));
  for (const auto& l : bdl) {
    CHECK(validate(l).is_distributive);
    for (Element x = 0; x < l.size(); ++x) CHECK(l.box(x) == x);
  }
  CHECK(enum_bdl(2).size() == 2);
}

TEST_CASE("small PS4 algebras") {
  const auto two = testing::enumerate(2, AlgebraKind::PS4);
  CHECK(testing::same_iso_set(two, {C("TRIVIAL"), C("C2")}));
  EnumerationTask t;
  t.min_size = t.max_size = 3;
  t.kind = AlgebraKind::PS4;
  const auto three = enum_algebras(t);
  for (const char* n : {"D3", "C3a", "C3b", "EX44III"}) CHECK(contains_iso(three, C(n)));
  CHECK(three.size() == 4);
}

TEST_CASE("enumeration agrees with brute force") {
  for (auto kind : {AlgebraKind::PMA, AlgebraKind::PK4, AlgebraKind::PS4}) {
    const auto fast = testing::enumerate(5, kind);
    const auto slow = naive_algebras(5, kind);
    CHECK(fast.size() == slow.size());
    CHECK(codes(fast) == codes(slow));
    CHECK(codes(fast).size() == fast.size());
  }
}

TEST_CASE("enumeration is sound and complete for the catalogues") {
  const auto si = testing::enumerate(6, AlgebraKind::PS4, true);
  for (const auto& a : si) {
    CHECK(is_ps4(a));
    CHECK(is_si(a));
  }
  for (const auto& n : figure2_names())
    if (C(n).size() <= 6) CHECK(contains_iso(si, C(n)));
  for (const auto& n : figure3_names())
    if (C(n).size() <= 6) CHECK(contains_iso(si, C(n)));
  // Sorted by size and distinct.
  for (std::size_t i = 1; i < si.size(); ++i) CHECK(si[i - 1].size() <= si[i].size());
  CHECK(dedup_iso(si).size() == si.size());

  const auto pk4 = testing::enumerate(5, AlgebraKind::PK4, true);
  CHECK(contains_iso(pk4, C("B2")));
  for (const auto& a : pk4) CHECK(is_pk4(a));
}

TEST_CASE("filters and equations") {
  EnumerationTask t;
  t.max_size = 5;
  t.kind = AlgebraKind::PS4;
  t.fsi_only = true;
  const auto fsi = enum_algebras(t);
  for (const auto& a : fsi) CHECK(is_fsi(a));
  t.fsi_only = false;
  t.equations = {parse_equation("box x ~ x")};
  for (const auto& a : enum_algebras(t))
    for (Element x = 0; x < a.size(); ++x) CHECK(a.box(x) == x);
  CHECK(parse_kind("pk4") == AlgebraKind::PK4);
  CHECK(kind_name(AlgebraKind::PMA) == "PMA");
  CHECK_THROWS(parse_kind("XYZ"));
}

TEST_CASE("cache and resume give identical results") {
  const auto dir = std::filesystem::temp_directory_path() / "poma_enum_cache_test";
  std::filesystem::remove_all(dir);
  EnumerationTask t;
  t.max_size = 5;
  t.kind = AlgebraKind::PK4;
  const auto direct = enum_algebras(t);
  const auto first = enum_algebras_cached(t, dir.string(), false);
  const auto resumed = enum_algebras_cached(t, dir.string(), true);
  REQUIRE(first.size() == direct.size());
  REQUIRE(resumed.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(first[i].same_tables(direct[i]));
    CHECK(resumed[i].same_tables(direct[i]));
    CHECK(resumed[i].name() == direct[i].name());
  }
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("budget") {
  EnumerationTask t;
  t.max_size = 6;
  t.kind = AlgebraKind::PMA;
  t.budget = 10;
  CHECK_THROWS_AS(enum_algebras(t), BudgetExceeded);
}
