#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poma/errors.hpp"
#include "poma/io.hpp"
#include "support.hpp"

using namespace poma;
using testing::C;

TEST_CASE("validate on the two-element algebras and D3") {
  auto c2 = validate(C("C2"));
  CHECK(c2.is_pma);
  CHECK(c2.is_pk4);
  CHECK(c2.is_ps4);
  CHECK(c2.violations.empty());

  auto b2 = validate(C("B2"));
  CHECK(b2.is_pma);
  CHECK_FALSE(b2.is_ps4);
  // box 0 = 1 is not below 0
  bool saw_t = false;
  for (const auto& v : b2.violations) saw_t = saw_t || v.axiom.find("box") != std::string::npos;
  CHECK(saw_t);

  CHECK(validate(C("D3")).is_ps4);
}

TEST_CASE("lattice operations") {
  auto c2 = C("C2");
  CHECK(c2.meet(0, 1) == 0);
  CHECK(c2.bottom() == 0);
  CHECK(c2.top() == 1);
  auto d3 = C("D3");
  CHECK(d3.join(1, 1) == 1);
  auto four = product(c2, c2);
  Element x = 0, y = 0;
  for (Element e = 0; e < four.size(); ++e)
    if (e != four.bottom() && e != four.top()) (x == 0 ? x : y) = e;
  REQUIRE(x != y);
  CHECK_FALSE(four.leq(x, y));
  CHECK(four.meet(x, y) == four.bottom());
}

TEST_CASE("corpus shapes") {
  // D4: 0 < a < b < 1, box a = box b = a, dia a = dia b = b
  auto d4 = C("D4");
  CHECK(d4.box_table() == std::vector<Element>{0, 1, 1, 3});
  CHECK(d4.diamond_table() == std::vector<Element>{0, 2, 2, 3});

  auto ex = C("EX44IV");
  REQUIRE(ex.size() == 5);
  for (Element e = 1; e <= 3; ++e) {
    CHECK(ex.box(e) == 0);
    CHECK(ex.diamond(e) == 4);
  }

  // Boolean lattice on {a1, a2}, a1 is bit 0.
  auto an = C("AN_MINUS:2");
  REQUIRE(an.size() == 4);
  const Element full = 3;
  auto box_def = [&](Element x) -> Element {
    if (x == full) return full;
    if (!(x & 1u)) return 0;
    return 1;
  };
  for (Element x = 0; x < 4; ++x) {
    CHECK(an.box(x) == box_def(x));
    CHECK(an.diamond(x) == (full & ~box_def(full & ~x)));
    for (Element y = 0; y < 4; ++y) CHECK(an.leq(x, y) == ((x & ~y) == 0));
  }
}

TEST_CASE("corpus lookup syntax") {
  CHECK(C("d4").same_tables(C("D4")));
  CHECK(C("EX46:3").same_tables(corpus("EX46", 3)));
  CHECK(C("an_minus(2)").same_tables(corpus("AN_MINUS", 2)));
  CHECK_THROWS_AS(C("NOPE"), NotFound);
  CHECK_THROWS_AS(C("EX46"), NotFound);
  CHECK_THROWS_AS(C("EX46:x"), NotFound);
  CHECK_THROWS_AS(C("EX46:9"), PreconditionError);
}

TEST_CASE("malformed input is structural, not an axiom failure") {
  AlgebraData d;
  d.size = 2;
  d.leq = {{1, 1}, {0}};
  d.box = {0, 1};
  d.diamond = {0, 1};
  CHECK_THROWS_AS(validate(d), StructuralError);
  d.leq = {{1, 1}, {0, 1}};
  d.box = {0, 5};
  CHECK_THROWS_AS(validate(d), StructuralError);
  CHECK_THROWS_AS(FiniteAlgebra::from_data(d), StructuralError);
  CHECK_THROWS_AS(algebra_from_json("{\"size\": 2, \"leq\": [[1]]}"), StructuralError);
  CHECK_THROWS_AS(algebra_from_json("not json"), StructuralError);

  // Antichain of two points: no bounds.
  d.leq = {{1, 0}, {0, 1}};
  d.box = {0, 1};
  auto r = validate(d);
  CHECK_FALSE(r.is_bounded_lattice);
  CHECK_FALSE(r.is_pma);
  CHECK_THROWS_AS(FiniteAlgebra::from_data(d), InvalidAlgebra);

  // N5 is a lattice but not distributive.
  d.size = 5;
  d.leq = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  d.box = {0, 1, 2, 3, 4};
  d.diamond = {0, 1, 2, 3, 4};
  r = validate(d);
  CHECK(r.is_bounded_lattice);
  CHECK_FALSE(r.is_distributive);
  CHECK_THROWS_AS(FiniteAlgebra::from_data(d), InvalidAlgebra);
}

TEST_CASE("JSON round trip") {
  for (const auto& a : testing::small_corpus()) {
    auto b = algebra_from_json(to_json(a));
    CHECK(b.same_tables(a));
    CHECK(b.name() == a.name());
  }
}

namespace {

std::vector<FiniteAlgebra> property_pool() {
  auto out = testing::small_corpus();
  for (auto& a : testing::enumerate(5, AlgebraKind::PMA)) out.push_back(std::move(a));
  return out;
}

}  // namespace

TEST_CASE("validate is deterministic and agrees with the fast checks") {
  for (const auto& a : property_pool()) {
    const auto r1 = to_json(validate(a));
    const auto r2 = to_json(validate(a));
    CHECK(r1 == r2);
    CHECK(to_json(validate(a.data())) == r1);
    auto r = validate(a);
    CHECK(r.is_pma == is_pma(a));
    CHECK(r.is_pk4 == is_pk4(a));
    CHECK(r.is_ps4 == is_ps4(a));
  }
}

TEST_CASE("PMA axioms hold exhaustively on every algebra passing is_pma") {
  std::size_t checked = 0;
  for (const auto& a : property_pool()) {
    if (!is_pma(a)) continue;
    ++checked;
    const std::size_t n = a.size();
    CHECK(a.box(a.top()) == a.top());
    CHECK(a.diamond(a.bottom()) == a.bottom());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        CHECK(a.box(a.meet(x, y)) == a.meet(a.box(x), a.box(y)));
        CHECK(a.diamond(a.join(x, y)) == a.join(a.diamond(x), a.diamond(y)));
        CHECK(a.leq(a.meet(a.box(x), a.diamond(y)), a.diamond(a.meet(x, y))));
        CHECK(a.leq(a.box(a.join(x, y)), a.join(a.box(x), a.diamond(y))));
        if (a.leq(x, y)) {
          CHECK(a.leq(a.box(x), a.box(y)));
          CHECK(a.leq(a.diamond(x), a.diamond(y)));
        }
      }
    if (is_ps4(a)) {
      for (Element c : {a.bottom(), a.top()}) {
        CHECK(a.box(c) == c);
        CHECK(a.diamond(c) == c);
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("PK4 and PS4 inequalities match the kind checks") {
  for (const auto& a : property_pool()) {
    bool k4 = true, t = true;
    for (Element x = 0; x < a.size(); ++x) {
      k4 = k4 && a.leq(a.box(x), a.box(a.box(x))) && a.leq(a.diamond(a.diamond(x)), a.diamond(x));
      t = t && a.leq(a.box(x), x) && a.leq(x, a.diamond(x));
    }
    CHECK(is_pk4(a) == (is_pma(a) && k4));
    CHECK(is_ps4(a) == (is_pma(a) && k4 && t));
  }
}

TEST_CASE("with_operators and lower covers") {
  auto d4 = C("D4");
  auto same = d4.with_operators(d4.box_table(), d4.diamond_table());
  CHECK(same.same_tables(d4));
  CHECK(lower_covers(d4, 3) == std::vector<Element>{2});
  CHECK(lower_covers(d4, 0).empty());
  CHECK_THROWS_AS(d4.with_operators({0, 1}, {0, 1}), StructuralError);
}

TEST_CASE("is_pma agrees with the axioms on random operator tables") {
  auto manual = [](const FiniteAlgebra& a) {
    if (a.box(a.top()) != a.top() || a.diamond(a.bottom()) != a.bottom()) return false;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        if (a.box(a.meet(x, y)) != a.meet(a.box(x), a.box(y))) return false;
        if (a.diamond(a.join(x, y)) != a.join(a.diamond(x), a.diamond(y))) return false;
        if (!a.leq(a.meet(a.box(x), a.diamond(y)), a.diamond(a.meet(x, y)))) return false;
        if (!a.leq(a.box(a.join(x, y)), a.join(a.box(x), a.diamond(y)))) return false;
      }
    return true;
  };
  std::mt19937 rng(7);
  std::size_t positives = 0;
  for (const auto& l : enum_bdl(5)) {
    std::uniform_int_distribution<Element> pick(0, Element(l.size() - 1));
    for (int i = 0; i < 400; ++i) {
      std::vector<Element> b(l.size()), d(l.size());
      for (auto& v : b) v = pick(rng);
      for (auto& v : d) v = pick(rng);
      // Bias towards the bounds so that some tables pass.
      b[l.top()] = l.top();
      d[l.bottom()] = l.bottom();
      auto a = l.with_operators(b, d);
      const bool m = manual(a);
      CHECK(is_pma(a) == m);
      positives += m;
    }
  }
  CHECK(positives > 0);
}
