#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poma/errors.hpp"
#include "support.hpp"

using namespace poma;
using testing::C;

TEST_CASE("parsing") {
  CHECK(parse_term("box(x /\\ dia y)") == Term::box(Term::meet(Term::var("x"), Term::diamond(Term::var("y")))));
  CHECK(parse_term("0") == Term::zero());
  CHECK(parse_term("1") == Term::one());
  const Term x = Term::var("x");
  const Term lhs = Term::meet(Term::box(x), Term::box(Term::box(x)));
  CHECK(parse_equation("box x /\\ box box x <= x") == leq_equation(lhs, x));
  CHECK(leq_equation(lhs, x) == Equation{Term::meet(lhs, x), lhs});
  // meet binds tighter than join
  CHECK(parse_term("x \\/ y /\\ z") ==
        Term::join(Term::var("x"), Term::meet(Term::var("y"), Term::var("z"))));
  auto q = parse_quasi("x ~ dia x & box x ~ 1 => x ~ 0");
  CHECK(q.premises.size() == 2);
  CHECK(q.conclusion == Equation{x, Term::zero()});
  auto s = parse_pos_exist("E x. box x ~ 0 & dia x ~ 1");
  CHECK(s.variables == std::vector<std::string>{"x"});
  CHECK(s.matrix.size() == 2);
  auto seq = parse_sequent("{y, x} |> box x");
  CHECK(seq.antecedent == std::vector<Term>{x, Term::var("y")});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_term("box"), ParseError);
  CHECK_THROWS_AS(parse_term("x /\\"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_equation("x"), ParseError);
  CHECK_THROWS_AS(parse_term("x $ y"), ParseError);
  CHECK_THROWS_AS(parse_pos_exist("E x. y ~ 0"), ParseError);
  try {
    parse_term("x /\\ )");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("printing round trip on random terms") {
  std::mt19937 rng(11);
  const std::vector<std::string> vars = {"x", "y", "z1"};
  for (int i = 0; i < 3000; ++i) {
    const Term t = testing::random_term(rng, 5, vars);
    CHECK(parse_term(to_string(t)) == t);
    const Equation e{t, testing::random_term(rng, 3, vars)};
    CHECK(parse_equation(to_string(e)) == e);
  }
  const auto q = parse_quasi("box x ~ 0 & dia x ~ 1 => x ~ y");
  CHECK(parse_quasi(to_string(q)) == q);
  const auto s = parse_pos_exist("E x, y. box x ~ 0 | dia y ~ 1 & x <= y");
  CHECK(parse_pos_exist(to_string(s)) == s);
  const auto seq = parse_sequent("{x, box y} |> dia x");
  CHECK(parse_sequent(to_string(seq)) == seq);
  CHECK(parse_sequent(to_string(parse_sequent("{} |> x"))).antecedent.empty());
}

TEST_CASE("evaluation") {
  auto d3 = C("D3");
  CHECK(eval(d3, parse_term("dia x"), {{"x", 1}}) == 2);
  CHECK(eval(d3, parse_term("box x"), {{"x", 1}}) == 0);
  for (const auto& a : testing::small_corpus())
    for (Element e = 0; e < a.size(); ++e) CHECK(eval(a, parse_term("x /\\ 1"), {{"x", e}}) == e);
  CHECK_THROWS_AS(eval(d3, parse_term("y"), {{"x", 1}}), PreconditionError);
}

TEST_CASE("satisfaction") {
  CHECK(holds_eq(C("D4"), parse_equation("box dia x ~ box x")).holds);
  auto r = holds_eq(C("C3a"), parse_equation("dia box dia x ~ dia x"));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  auto c3a = C("C3a");
  CHECK(eval(c3a, parse_term("dia box dia x"), *r.witness) != eval(c3a, parse_term("dia x"), *r.witness));

  const auto sentence = parse_pos_exist("E x. box x ~ 0 & dia x ~ 1");
  CHECK_FALSE(holds_pos_exist(C("C2"), sentence));
  CHECK(holds_pos_exist(C("D3"), sentence));

  auto q = parse_quasi("x ~ dia x => x ~ 0");
  CHECK(holds_quasi(C("B2"), q).holds);
  CHECK_FALSE(holds_quasi(C("C2"), q).holds);

  CHECK(holds_all(C("D4"), {parse_equation("box dia x ~ box x"), parse_equation("dia box x ~ dia x")}));
  auto sol = solve_all(C("D3"), {parse_equation("box x ~ 0"), parse_equation("dia x ~ 1")}, {"x"});
  REQUIRE(sol);
  CHECK(sol->at("x") == 1);
  CHECK_FALSE(solve_all(C("C2"), {parse_equation("box x ~ 0"), parse_equation("dia x ~ 1")}, {"x"}));
}

TEST_CASE("tau and rho") {
  const Term g1 = Term::var("g1"), g2 = Term::var("g2"), phi = Term::box(Term::var("p"));
  CHECK(tau(make_sequent({g1, g2}, phi)) == leq_equation(Term::meet(g1, g2), phi));
  CHECK(tau(make_sequent({}, phi)) == leq_equation(Term::one(), phi));
  const Equation e{Term::var("p"), phi};
  auto [s1, s2] = rho(e);
  CHECK(s1 == make_sequent({Term::var("p")}, phi));
  CHECK(s2 == make_sequent({phi}, Term::var("p")));
}

TEST_CASE("e and tau(rho(e)) hold in exactly the same PMA algebras") {
  auto pool = testing::enumerate(4, AlgebraKind::PMA);
  for (auto& a : testing::small_corpus())
    if (is_pma(a)) pool.push_back(a);
  std::mt19937 rng(5);
  const std::vector<std::string> vars = {"x", "y"};
  for (int i = 0; i < 150; ++i) {
    const Equation e{testing::random_term(rng, 3, vars), testing::random_term(rng, 3, vars)};
    const auto [s1, s2] = rho(e);
    const Equation t1 = tau(s1), t2 = tau(s2);
    for (const auto& a : pool) {
      const bool direct = holds_eq(a, e).holds;
      const bool translated = holds_eq(a, t1).holds && holds_eq(a, t2).holds;
      CHECK(direct == translated);
    }
  }
}

TEST_CASE("term operations are monotone in every variable") {
  auto pool = testing::enumerate(4, AlgebraKind::PMA);
  pool.push_back(C("D5a"));
  pool.push_back(C("AN_MINUS:3"));
  std::mt19937 rng(3);
  const std::vector<std::string> vars = {"x", "y"};
  for (int i = 0; i < 60; ++i) {
    const Term t = testing::random_term(rng, 4, vars);
    for (const auto& a : pool) {
      const auto table = term_table(a, t, vars);
      const std::size_t n = a.size();
      for (Element x = 0; x < n; ++x)
        for (Element x2 = 0; x2 < n; ++x2) {
          if (!a.leq(x, x2)) continue;
          for (Element y = 0; y < n; ++y) {
            CHECK(a.leq(table[x * n + y], table[x2 * n + y]));
            CHECK(a.leq(table[y * n + x], table[y * n + x2]));
          }
        }
    }
  }
}

TEST_CASE("variables and term tables") {
  CHECK(variables(parse_equation("box y ~ x /\\ y")) == std::vector<std::string>{"x", "y"});
  auto c2 = C("C2");
  CHECK(term_table(c2, parse_term("x /\\ y"), {"x", "y"}) == std::vector<Element>{0, 0, 0, 1});
  CHECK(iterate_box(Term::var("x"), 2) == parse_term("box box x"));
  CHECK(iterate_diamond(Term::var("x"), 0) == Term::var("x"));
}
