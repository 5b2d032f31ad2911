#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "poma/congruence.hpp"
#include "poma/errors.hpp"
#include "poma/free.hpp"
#include "poma/varieties.hpp"
#include "support.hpp"

using namespace poma;
using testing::C;

namespace {

VarietyHandle V(std::vector<std::string> names) { return variety_of_names(names); }

std::size_t index_of(const Figure4& f, const std::string& label) {
  for (std::size_t i = 0; i < f.handles.size(); ++i)
    if (f.handles[i].label == label) return i;
  FAIL("missing handle " << label);
  return 0;
}

std::size_t upper_covers(const std::vector<Edge>& edges, std::size_t i) {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.first == i;
  return n;
}

}  // namespace

TEST_CASE("inclusion between generated varieties") {
  CHECK(includes(V({"D4"}), V({"C2"})));
  CHECK_FALSE(includes(V({"C2"}), V({"D4"})));
  CHECK(includes(V({"D3", "D4"}), V({"D4"})));
  CHECK_FALSE(includes(V({"D3"}), V({"D4"})));
  CHECK(includes(V({"A4"}), V({"D3"})));
  CHECK(equals(V({"D4", "C2"}), V({"D4"})));
  CHECK(equals(variety_of({free_over({C("D4")}, 1).algebra}), V({"D4"})));
  CHECK(includes(V({"C2"}), trivial_variety()));
  CHECK(contains_si(V({"F1_PS4"}), C("C3b")));
  CHECK_FALSE(contains_si(V({"D4"}), C("D3")));
  CHECK(variety_hash(V({"D4"})) == variety_hash(V({"D4", "C2"})));
  CHECK(variety_hash(V({"D4"})) != variety_hash(V({"D3"})));
  CHECK_THROWS_AS(V({"NOPE"}), NotFound);
}

TEST_CASE("inclusion is a partial order on the diagram handles") {
  const auto& hs = figure4().handles;
  for (const auto& a : hs) {
    CHECK(includes(a, a));
    for (const auto& b : hs) {
      if (includes(a, b) && includes(b, a)) CHECK(a.label == b.label);
      for (const auto& c : hs)
        if (includes(a, b) && includes(b, c)) CHECK(includes(a, c));
    }
  }
}

TEST_CASE("the lattice of small varieties") {
  const auto& f = figure4();
  CHECK(f.handles.size() == 16);
  CHECK(f.expected.size() == 21);
  const auto edges = covers_poset(f.handles);
  CHECK(edges == f.expected);
  CHECK(upper_covers(edges, index_of(f, "V(C2)")) == 4);
  CHECK(upper_covers(edges, index_of(f, "V(D4)")) == 3);
  CHECK(upper_covers(edges, index_of(f, "V(D3)")) == 5);
  CHECK(upper_covers(edges, index_of(f, "Trivial")) == 1);
  const auto dot = variety_dot(f.handles, edges);
  CHECK(dot.rfind("digraph varieties {", 0) == 0);
  CHECK(dot.find("V(C3a,C3b)") != std::string::npos);
  CHECK(variety_dot(f.handles, edges) == dot);
}

TEST_CASE("splitting pairs") {
  const auto c3a = splitting_c3a(C("C3a"));
  CHECK_FALSE(c3a.equation_holds);
  CHECK_FALSE(c3a.excluded);
  const auto d4 = splitting_c3a(C("D4"));
  CHECK(d4.equation_holds);
  CHECK(d4.excluded);
  CHECK_FALSE(splitting_c3b(C("C4b")).equation_holds);
  CHECK(splitting_c3b(C("C3a")).equation_holds);
  CHECK_FALSE(splitting_d3(C("A4")).equation_holds);
  CHECK(splitting_d3(C("C3b")).equation_holds);
  for (const auto& a : testing::small_corpus()) {
    if (is_ps4(a)) {
      CHECK(splitting_c3a(a).consistent());
      CHECK(splitting_c3b(a).consistent());
    }
    if (is_pk4(a)) CHECK(splitting_d3(a).consistent());
  }
  CHECK(splitting_battery(6, 5).passed);
}

TEST_CASE("only C2 and D4 satisfy both endomorphism equations") {
  const auto r = theorem610_battery(6);
  CHECK(r.passed);
  CHECK(format_witnesses(r.witnesses) == "{C2, D4}");
  CHECK(r.checked > 0);
  CHECK(format_witnesses(theorem610_battery(2).witnesses) == "{C2}");
  CHECK(format_witnesses({}) == "{}");
  const auto l92 = lemma92_battery(5);
  CHECK(l92.passed);
  CHECK(format_witnesses(l92.witnesses) == "{B2}");
}

TEST_CASE("box and dia as endomorphisms") {
  for (const char* n : {"D4", "C2"}) {
    const auto r = lemma64_66_properties(C(n));
    CHECK(r.passed());
    CHECK(r.si);
  }
  const auto f = lemma64_66_properties(free_over({C("D4")}, 1).algebra);
  CHECK(f.passed());
  CHECK_FALSE(f.si);
  CHECK(lemma64_66_properties(product(C("D4"), C("C2"))).passed());
  CHECK_THROWS_AS(lemma64_66_properties(C("D3")), PreconditionError);
}

TEST_CASE("inclusion agrees with separating equations") {
  const std::vector<std::string> names = {"C2", "D3", "C3a", "C3b", "D4", "B2", "A4"};
  std::size_t separated = 0;
  for (const auto& x : names)
    for (const auto& y : names) {
      const auto a = C(x), b = C(y);
      // V(a) inside V(b) iff nothing valid in b fails in a.
      const bool inside = includes(V({y}), V({x}));
      const auto s = separating_equation(a, b);
      if (inside) {
        CHECK_FALSE(s.equation);
      } else if (!s.truncated) {
        CHECK_MESSAGE(s.equation, x << " vs " << y);
      }
      if (s.equation) {
        ++separated;
        CHECK(holds_eq(b, *s.equation).holds);
        CHECK_FALSE(holds_eq(a, *s.equation).holds);
      }
    }
  CHECK(separated > 10);
}

TEST_CASE("one-variable theory shadows") {
  const auto l83 = lemma83_shadow(6);
  CHECK(l83.passed);
  const auto l84 = lemma84_shadow(6);
  CHECK(l84.passed);
  CHECK(format_witnesses(l84.witnesses) == "{C2, C3a}");
}
