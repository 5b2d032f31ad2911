#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "poma/congruence.hpp"
#include "poma/constructions.hpp"
#include "poma/errors.hpp"
#include "support.hpp"

using namespace poma;
using testing::C;

namespace {

FiniteAlgebra identity_boolean(unsigned atoms) {
  return powerset_algebra(atoms, [](Element x) { return x; }, [](Element x) { return x; });
}

}  // namespace

TEST_CASE("products, subalgebras and quotients") {
  auto c2 = C("C2");
  auto p = product(c2, c2);
  CHECK(p.size() == 4);
  CHECK(is_iso(p, identity_boolean(2)));

  auto ex = C("EX46:3");
  const auto cep = has_cep(ex);
  REQUIRE_FALSE(cep.holds);
  const auto [sub, emb] = subalgebra_generated(ex, cep.subuniverse);
  CHECK(sub.size() == 4);
  CHECK_FALSE(is_simple(sub));
  CHECK_FALSE(is_trivial(sub));
  CHECK(is_homomorphism(sub, ex, emb));

  // D4 is among the quotients of the free one-generated algebra.
  auto f1 = C("F1_PS4");
  bool found = false;
  for (const auto& theta : meet_irreducible_congruences(f1)) {
    const auto [q, proj] = quotient(f1, theta);
    CHECK(is_homomorphism(f1, q, proj));
    found = found || is_iso(q, C("D4"));
  }
  CHECK(found);
}

TEST_CASE("homomorphisms and isomorphism") {
  CHECK_FALSE(is_iso(C("C3a"), C("C3b")));
  CHECK(is_iso(C("D4"), C("D4")));
  CHECK(embeddings(C("C2"), C("D3")).size() == 1);
  CHECK(homs(C("D3"), C("C2")).empty());
  CHECK(embeddings(C("C2"), C("B2")).empty());
  // Against brute force over all maps.
  auto brute = [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
    std::size_t count = 0;
    Map f(a.size(), 0);
    while (true) {
      bool ok = true;
      for (Element x = 0; x < a.size() && ok; ++x) {
        ok = f[a.box(x)] == b.box(f[x]) && f[a.diamond(x)] == b.diamond(f[x]);
        for (Element y = 0; y < a.size() && ok; ++y)
          ok = f[a.meet(x, y)] == b.meet(f[x], f[y]) && f[a.join(x, y)] == b.join(f[x], f[y]);
      }
      ok = ok && f[a.bottom()] == b.bottom() && f[a.top()] == b.top();
      count += ok;
      std::size_t i = 0;
      while (i < f.size() && ++f[i] == b.size()) f[i++] = 0;
      if (i == f.size()) return count;
    }
  };
  const std::vector<std::string> names = {"C2", "B2", "D3", "C3a", "D4", "A4", "D5a", "C4b"};
  for (const auto& x : names)
    for (const auto& y : names) CHECK(homs(C(x), C(y)).size() == brute(C(x), C(y)));
  HomQuery q;
  q.injective = true;
  q.limit = 1;
  CHECK(find_homs(C("D4"), product(C("D4"), C("C2")), q).size() == 1);
}

TEST_CASE("si members of HS") {
  CHECK(testing::same_iso_set(hs_si(C("D4")), {C("C2"), C("D4")}));
  CHECK(testing::same_iso_set(hs_si(C("C2")), {C("C2")}));
  CHECK(hs_si(C("TRIVIAL")).empty());
  CHECK(si_quotients(C("EX44IV")).size() > 1);
  // The transcribed free algebra gives back the one-generated si catalogue.
  std::vector<FiniteAlgebra> fig2;
  for (const auto& n : figure2_names()) fig2.push_back(C(n));
  CHECK(testing::same_iso_set(si_quotients(C("F1_PS4")), fig2));
}

TEST_CASE("canonical forms are invariant under relabelling") {
  std::mt19937 rng(17);
  auto pool = testing::small_corpus();
  for (auto& a : testing::enumerate(5, AlgebraKind::PK4)) pool.push_back(std::move(a));
  for (const auto& a : pool) {
    std::vector<Element> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0u);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      auto b = testing::relabel(a, perm);
      CHECK(canonical_form(b) == canonical_form(a));
      CHECK(canonical_algebra(b).same_tables(canonical_algebra(a)));
      CHECK(is_iso(a, b));
    }
  }
  // Quotients of isomorphic algebras by corresponding congruences.
  auto a = C("C6a");
  const std::vector<Element> perm = {0, 4, 2, 1, 3, 5};
  auto b = testing::relabel(a, perm);
  for (const auto& theta : con_lattice(a)) {
    std::vector<std::uint32_t> labels(a.size());
    for (Element x = 0; x < a.size(); ++x) labels[perm[x]] = theta.block(x);
    const auto qa = quotient(a, theta).first;
    const auto qb = quotient(b, Partition(labels)).first;
    CHECK(canonical_form(qa) == canonical_form(qb));
  }
}

TEST_CASE("Jonsson: si members of a product come from the factors") {
  const std::vector<std::string> names = {"C2", "B2", "D3", "C3a", "C3b", "D4", "A4"};
  for (const auto& x : names)
    for (const auto& y : names) {
      auto a = C(x), b = C(y);
      auto both = hs_si(a);
      for (auto& s : hs_si(b)) both.push_back(s);
      for (const auto& s : hs_si(product(a, b))) CHECK(contains_iso(both, s));
    }
}

TEST_CASE("prime filters and dual spaces") {
  auto pf = prime_filters(C("C2"));
  REQUIRE(pf.size() == 1);
  CHECK(pf[0] == std::vector<Element>{1});

  auto x = dual_space(C("EX44III"));
  REQUIRE(x.size() == 2);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) CHECK(x.rel(p, q) == (p == q));
}

TEST_CASE("Boolean envelopes of EX44III and EX44IV") {
  const auto e3 = envelope_algebra(boolean_envelope(C("EX44III"))).first;
  CHECK(e3.size() == 4);
  CHECK(is_iso(e3, identity_boolean(2)));
  CHECK_FALSE(is_well_connected(e3));

  auto ex4 = C("EX44IV");
  CHECK_FALSE(is_fsi(ex4));
  const auto e4 = envelope_algebra(boolean_envelope(ex4)).first;
  CHECK(is_ps4(e4));
  CHECK(is_simple(e4));
}

TEST_CASE("complex algebras") {
  CHECK(is_iso(complex_algebra(1, {{0, 0}}), C("C2")));
  // Preorder read off the box of AN_MINUS(3): a1 sees only itself, the
  // other worlds see everything.
  std::vector<std::pair<std::size_t, std::size_t>> r = {{0, 0}};
  for (std::size_t w = 1; w < 3; ++w)
    for (std::size_t v = 0; v < 3; ++v) r.emplace_back(w, v);
  auto m = complex_algebra(3, r);
  CHECK(m.same_tables(C("AN_MINUS:3")));
  CHECK(FrameAlgebra(3, {1, 7, 7}).to_finite().same_tables(m));
  CHECK_THROWS(complex_algebra(2, {{0, 5}}));
}

TEST_CASE("open filters match congruences of Boolean modal algebras") {
  for (const char* n : {"D3", "C3a", "D4", "A4", "EX44IV", "AN_MINUS:2"}) {
    const auto [m, comp] = envelope_algebra(boolean_envelope(C(n)));
    CHECK(open_filter_congruence_iso_check(m, comp));
    CHECK(open_filters(m, comp).size() == con_lattice(m).size());
  }
}

TEST_CASE("retracts") {
  auto f = C("D4");
  CHECK(is_retract(f, f));
  CHECK_FALSE(is_retract(C("D3"), C("C2")));
  CHECK(is_retract(C("C2"), C("D4")));
}

TEST_CASE("kappa embeds every small PMA into its envelope") {
  std::size_t checked = 0;
  for (const auto& a : testing::enumerate(5, AlgebraKind::PMA)) {
    const auto env = boolean_envelope(a);
    const auto [m, comp] = envelope_algebra(env);
    Map k(env.kappa.begin(), env.kappa.end());
    CHECK(is_homomorphism(a, m, k));
    auto sorted = k;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(satisfies_kplus(dual_space(a)));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("subuniverses") {
  auto d4 = C("D4");
  const auto subs = subuniverses(d4);
  // {0,1}, and the whole chain; {0, a, 1} is not closed under dia.
  CHECK(subs.size() == 2);
  CHECK(subuniverse_closure(d4, {1}) == std::vector<Element>{0, 1, 2, 3});
  CHECK(dedup_iso({C("C2"), C("C2"), C("D3")}).size() == 2);
}
