#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poma/batteries.hpp"
#include "poma/congruence.hpp"
#include "support.hpp"

using namespace poma;
using testing::C;

namespace {

// Independent CEP check: every congruence of every subalgebra is the trace
// of some congruence of the whole algebra.
bool cep_by_traces(const FiniteAlgebra& a) {
  const auto cons = con_lattice(a);
  for (const auto& su : subuniverses(a)) {
    const auto [sub, emb] = subalgebra_of(a, su);
    for (const auto& theta : con_lattice(sub)) {
      bool extended = false;
      for (const auto& phi : cons) {
        bool same = true;
        for (Element x = 0; x < sub.size() && same; ++x)
          for (Element y = 0; y < sub.size() && same; ++y)
            same = theta.same(x, y) == phi.same(emb[x], emb[y]);
        if (same) {
          extended = true;
          break;
        }
      }
      if (!extended) return false;
    }
  }
  return true;
}

bool is_chain(const FiniteAlgebra& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("principal congruences") {
  // D3: a ~ 1 gives box a ~ box 1, i.e. 0 ~ 1.
  CHECK(cg(C("D3"), {{1, 2}}).is_total());
  CHECK(cg(C("D4"), {}).is_identity());
  auto p = cg(C("EX44IV"), {{1, 2}});
  CHECK(p.blocks() == std::vector<std::vector<Element>>{{0}, {1, 2}, {3}, {4}});
}

TEST_CASE("congruence lattices and si") {
  CHECK(con_lattice(C("C2")).size() == 2);
  CHECK(con_lattice(C("B2")).size() == 2);
  CHECK(is_simple(C("EX46:3")));
  CHECK(C("EX46:3").size() == 8);
  CHECK_FALSE(is_fsi(C("EX44IV")));
  CHECK(is_si(C("D4")));
  auto m = monolith(C("D4"));
  CHECK(m.block_count() == 3);
  CHECK(m.same(1, 2));
  for (const auto& n : figure2_names()) CHECK(is_si(C(n)));
  for (const auto& n : figure3_names()) CHECK(is_si(C(n)));
  CHECK_FALSE(is_si(C("TRIVIAL")));
}

TEST_CASE("well-connectedness") {
  CHECK(is_well_connected(C("EX44III")));
  CHECK(is_well_connected(C("C2")));
  for (const auto& a : testing::small_corpus())
    if (is_ps4(a) && is_fsi(a)) CHECK(is_well_connected(a));
}

TEST_CASE("simplicity criterion") {
  CHECK(is_simple_lemma45(C("B2")));
  CHECK(is_simple_lemma45(C("EX46:3")));
  CHECK_FALSE(is_simple_lemma45(C("D4")));
  // D4: box is not the identity on {a, b} yet neither element is boxed to 1.
  CHECK_FALSE(is_simple(C("D4")));
}

TEST_CASE("lattice and K4 principal congruence formulas") {
  auto c2 = C("C2");
  CHECK(cg_dl(c2, 0, 0).is_identity());
  CHECK(cg_dl(c2, 0, 1).is_total());
  auto battery = cg_dl_battery(5);
  CHECK(battery.passed);

  // The envelope of D3 with kappa(a) and the top.
  auto d3 = C("D3");
  const auto env = boolean_envelope(d3);
  const auto [m, comp] = envelope_algebra(env);
  const Element ka = Element(env.kappa[1]), top = m.top();
  CHECK(cg_k4(m, comp, ka, top) == cg(m, {{ka, top}}));
  for (Element x = 0; x < m.size(); ++x)
    for (Element y = 0; y < m.size(); ++y) CHECK(cg_k4(m, comp, x, y) == cg(m, {{x, y}}));
}

TEST_CASE("congruence extension") {
  auto ex = C("EX46:3");
  auto r = has_cep(ex);
  CHECK_FALSE(r.holds);
  REQUIRE(r.subuniverse.size() == 4);
  const auto [sub, emb] = subalgebra_of(ex, r.subuniverse);
  CHECK(is_chain(sub));
  CHECK_FALSE(is_simple(sub));
  REQUIRE(r.congruence);
  CHECK(is_congruence(sub, *r.congruence));
  CHECK(has_cep(C("C2")).holds);
  CHECK(has_cep(C("D4")).holds);
  for (const auto& a : testing::small_corpus())
    if (a.size() <= 8) CHECK(has_cep(a).holds == cep_by_traces(a));
}

TEST_CASE("Cg is the least congruence above the pairs") {
  auto pool = testing::enumerate(4, AlgebraKind::PMA);
  for (const char* n : {"D5a", "C6a", "AN_MINUS:3", "EX44IV"}) pool.push_back(C(n));
  for (const auto& a : pool) {
    const auto cons = con_lattice(a);
    for (const auto& c : cons) CHECK(is_congruence(a, c));
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = x + 1; y < a.size(); ++y) {
        Partition least = Partition::total(a.size());
        for (const auto& c : cons)
          if (c.same(x, y)) least = least.intersect(c);
        CHECK(cg(a, {{x, y}}) == least);
      }
  }
}

TEST_CASE("si, fsi and well-connectedness on enumerated PS4 algebras") {
  std::size_t fsi = 0;
  for (const auto& a : testing::enumerate(6, AlgebraKind::PS4)) {
    if (is_si(a)) CHECK(is_fsi(a));
    if (!is_fsi(a)) continue;
    ++fsi;
    CHECK(is_well_connected(a));
    for (Element x = 0; x < a.size(); ++x) {
      if (x == a.bottom() || x == a.top()) continue;
      CHECK((a.less(a.box(x), x) || a.less(x, a.diamond(x))));
    }
  }
  CHECK(fsi > 0);
}

TEST_CASE("simplicity criterion agrees with the congruence lattice") {
  std::size_t simple = 0;
  for (const auto& a : testing::enumerate(6, AlgebraKind::PK4)) {
    if (is_trivial(a)) continue;
    CHECK(is_simple(a) == is_simple_lemma45(a));
    simple += is_simple(a);
  }
  for (const char* n : {"EX46:3", "EX46:4", "AN_SIMPLE:2", "AN_SIMPLE:3", "AN_MINUS:2", "B2"}) {
    auto a = C(n);
    CHECK(is_simple(a) == is_simple_lemma45(a));
  }
  CHECK(simple > 0);
}

TEST_CASE("partition helpers") {
  Partition p({5, 5, 2, 5});
  CHECK(p.labels() == std::vector<std::uint32_t>{0, 0, 1, 0});
  CHECK(p.block_count() == 2);
  CHECK_FALSE(p.refines(Partition::identity(4)));
  CHECK(p.intersect(Partition::total(4)) == p);
  CHECK(Partition::identity(4).refines(p));
  CHECK(p.generating_pairs() == std::vector<Pair>{{0, 1}, {0, 3}});
  CHECK(p.to_string() == "[[0,1,3],[2]]");
}
